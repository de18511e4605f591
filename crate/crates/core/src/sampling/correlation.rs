use super::SamplingError;

/// Sample Pearson correlation coefficient.
pub fn pearson(xs: &[f64], ys: &[f64]) -> Result<f64, SamplingError> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return Err(SamplingError::Length(xs.len(), ys.len()));
    }
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (&x, &y) in xs.iter().zip(ys) {
        let (dx, dy) = (x - mx, y - my);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(SamplingError::ZeroVariance);
    }
    Ok((sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0))
}

/// Fraction of pairs with `y` within `tolerance` of `frac(branch_factor · x)`,
/// i.e. lying on one of the `branch_factor` lines `y = b·x − k`. Distances are
/// taken around the unit circle.
pub fn branch_alignment(xs: &[f64], ys: &[f64], branch_factor: u32, tolerance: f64) -> f64 {
    assert!(branch_factor >= 2, "branch factor must be at least 2");
    let n = xs.len().min(ys.len());
    if n == 0 {
        return 0.0;
    }
    let b = branch_factor as f64;
    let aligned = xs
        .iter()
        .zip(ys)
        .filter(|(&x, &y)| {
            let d = (y - b * x).rem_euclid(1.0);
            d.min(1.0 - d) < tolerance
        })
        .count();
    aligned as f64 / n as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{SplitMix64, UnitStream};

    #[test]
    fn pearson_examples() {
        let xs = [1.0, 2.0, 3.0];
        assert!((pearson(&xs, &xs).unwrap() - 1.0).abs() < 1e-15);
        let neg: Vec<f64> = xs.iter().map(|x| -x).collect();
        assert!((pearson(&xs, &neg).unwrap() + 1.0).abs() < 1e-15);
        // sxy = 3, sxx = 2, syy = 14/3  ->  3 / sqrt(28/3)
        let r = pearson(&xs, &[1.0, 2.0, 4.0]).unwrap();
        assert!((r - 3.0 / (28.0f64 / 3.0).sqrt()).abs() < 1e-14);
        assert!((r - 0.981_980_506_061_965_6).abs() < 1e-12);
    }

    #[test]
    fn pearson_errors() {
        assert_eq!(pearson(&[1.0], &[1.0]), Err(SamplingError::Length(1, 1)));
        assert_eq!(
            pearson(&[1.0, 1.0], &[1.0, 2.0]),
            Err(SamplingError::ZeroVariance)
        );
    }

    #[test]
    fn constructed_identity_aligns() {
        let mut g = SplitMix64::new(7);
        let xs: Vec<f64> = (0..1000).map(|_| g.next_unit()).collect();
        let ys: Vec<f64> = xs.iter().map(|x| (16.0 * x).fract()).collect();
        assert_eq!(branch_alignment(&xs, &ys, 16, 1e-9), 1.0);
    }

    #[test]
    fn independent_points_rarely_align() {
        // Monte-Carlo check of the band measure: for each x exactly one line
        // crosses [0, 1), so the vertical band has width 2·tol.
        let mut g = SplitMix64::new(99);
        let n = 200_000;
        let xs: Vec<f64> = (0..n).map(|_| g.next_unit()).collect();
        let ys: Vec<f64> = (0..n).map(|_| g.next_unit()).collect();
        let tol = 1e-3;
        let a = branch_alignment(&xs, &ys, 16, tol);
        let expected = 2.0 * tol;
        assert!((a - expected).abs() < 5.0 * (expected / n as f64).sqrt());
    }

    #[test]
    fn pearson_of_branch_map_is_one_over_b() {
        let mut g = SplitMix64::new(2014);
        let xs: Vec<f64> = (0..1000).map(|_| g.next_unit()).collect();
        let ys: Vec<f64> = xs.iter().map(|x| (16.0 * x).fract()).collect();
        let r = pearson(&xs, &ys).unwrap();
        assert!((r - 0.0625).abs() < 0.1, "r = {r}");
    }
}
