use super::{GasrConfig, GasrError};
use crate::benchmarks::Objective;
use crate::sampling::{indexed_integer, indexed_uniform};
use crate::table::PiFractionTable;
use crate::Scalar;
use std::cmp::Ordering;

/// One generation of chromosomes with their fitness.
#[derive(Debug, Clone, PartialEq)]
pub struct Population<T> {
    dims: usize,
    genes: Vec<T>,
    pub fitness: Vec<T>,
    pub generation: usize,
}

impl<T: Scalar> Population<T> {
    pub fn new(size: usize, dims: usize, generation: usize) -> Self {
        Self {
            dims,
            genes: vec![T::zero(); size * dims],
            fitness: vec![T::neg_infinity(); size],
            generation,
        }
    }

    pub fn size(&self) -> usize {
        self.fitness.len()
    }

    pub fn dims(&self) -> usize {
        self.dims
    }

    /// Chromosome `c`, 1-based.
    pub fn chromosome(&self, c: usize) -> &[T] {
        &self.genes[(c - 1) * self.dims..c * self.dims]
    }

    pub fn chromosome_mut(&mut self, c: usize) -> &mut [T] {
        &mut self.genes[(c - 1) * self.dims..c * self.dims]
    }

    pub fn chromosomes(&self) -> impl Iterator<Item = &[T]> {
        self.genes.chunks_exact(self.dims)
    }

    /// Index (1-based) and fitness of the fittest chromosome; later ones win ties.
    pub fn best(&self) -> (usize, T) {
        let mut best = (1, self.fitness[0]);
        for (i, &f) in self.fitness.iter().enumerate().skip(1) {
            if f >= best.1 {
                best = (i + 1, f);
            }
        }
        best
    }
}

/// Generation 0: gene `(c, i)` is drawn at table index `c·i`. Returns the
/// evaluated population.
pub fn init_population<T: Scalar, O: Objective<T>>(
    config: &GasrConfig<T>,
    objective: &O,
    table: &PiFractionTable,
) -> Population<T> {
    let dims = objective.dims();
    let mut pop = Population::new(config.population, dims, 0);
    let (lower, upper) = (objective.lower(), objective.upper());
    for c in 1..=config.population {
        let chromo = pop.chromosome_mut(c);
        for i in 1..=dims {
            let k = (c * i) as u64 + config.index_offset;
            chromo[i - 1] = indexed_uniform(table, k, lower[i - 1], upper[i - 1]);
        }
    }
    for c in 1..=config.population {
        pop.fitness[c - 1] = objective.evaluate(pop.chromosome(c));
    }
    pop
}

/// Parent numbers for a pair, and how many times the index had to advance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Parents {
    pub s: usize,
    pub t: usize,
    pub advances: usize,
}

/// Draws `s` at index `k` and `t` at `k + 2`; on a collision both are redrawn
/// with `k` advanced by one.
pub fn select_parents(
    table: &PiFractionTable,
    population: usize,
    base_index: u64,
) -> Result<Parents, GasrError> {
    let n = population as i64;
    let mut k = base_index;
    for advances in 0..table.count() {
        let s = indexed_integer(table, k, 1, n) as usize;
        let t = indexed_integer(table, k + 2, 1, n) as usize;
        if s != t {
            return Ok(Parents { s, t, advances });
        }
        k += 1;
    }
    Err(GasrError::DegenerateTable(table.count()))
}

/// The four sibling candidates, gene by gene:
///
/// ```text
/// b1 = (1−w)·max + w·mid     b3 = (1−w)·upper + w·max
/// b2 = (1−w)·min + w·mid     b4 = (1−w)·lower + w·min
/// ```
///
/// Results are clamped to the box against rounding.
pub fn crossover_children<T: Scalar>(
    parent_s: &[T],
    parent_t: &[T],
    lower: &[T],
    upper: &[T],
    w: T,
) -> [Vec<T>; 4] {
    let dims = parent_s.len();
    let one_w = T::one() - w;
    let two = T::lit(2.0);
    let mut kids: [Vec<T>; 4] = std::array::from_fn(|_| Vec::with_capacity(dims));
    for i in 0..dims {
        let (a, b) = (parent_s[i], parent_t[i]);
        let hi = a.max(b);
        let lo = a.min(b);
        let mid = (a + b) / two;
        let clamp = |v: T| v.max(lower[i]).min(upper[i]);
        kids[0].push(clamp(one_w * hi + w * mid));
        kids[1].push(clamp(one_w * lo + w * mid));
        kids[2].push(clamp(one_w * upper[i] + w * hi));
        kids[3].push(clamp(one_w * lower[i] + w * lo));
    }
    kids
}

/// 0-based indices of the best and second-best child; ties keep child order.
pub fn place_best_children<T: Scalar>(fitness: &[T; 4]) -> (usize, usize) {
    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&a, &b| desc(fitness[a], fitness[b]));
    (order[0], order[1])
}

/// How the two surviving children are chosen from the four candidates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ChildRanking {
    /// Best and second-best child by fitness.
    #[default]
    Fitness,
    /// The original program's tag sort: one tag array is set to 1..4 once per
    /// run and re-sorted alongside every fresh set of child fitnesses, so the
    /// surviving labels are the tags that land in the top two positions.
    CarriedTags,
}

/// Child chooser holding the tag array for [`ChildRanking::CarriedTags`].
#[derive(Debug, Clone)]
pub struct ChildRanker {
    mode: ChildRanking,
    tags: [usize; 4],
}

impl ChildRanker {
    pub fn new(mode: ChildRanking) -> Self {
        Self {
            mode,
            tags: [0, 1, 2, 3],
        }
    }

    /// 0-based indices of the children that fill slots `c` and `c + 1`.
    pub fn rank<T: Scalar>(&mut self, fitness: &[T; 4]) -> (usize, usize) {
        match self.mode {
            ChildRanking::Fitness => place_best_children(fitness),
            ChildRanking::CarriedTags => {
                let mut order = [0usize, 1, 2, 3];
                order.sort_by(|&a, &b| desc(fitness[a], fitness[b]));
                let old = self.tags;
                for (slot, &pos) in order.iter().enumerate() {
                    self.tags[slot] = old[pos];
                }
                (self.tags[0], self.tags[1])
            }
        }
    }
}

/// Descending order with NaN ranked last.
fn desc<T: Scalar>(a: T, b: T) -> Ordering {
    match (a.is_nan(), b.is_nan()) {
        (true, true) => Ordering::Equal,
        (true, false) => Ordering::Greater,
        (false, true) => Ordering::Less,
        _ => b.partial_cmp(&a).unwrap(),
    }
}

/// Mutation radius `1 − (g/G)^((1 − g/G)^α)`: close to 1 early, 0 at `g = G`.
pub fn mutation_radius<T: Scalar>(generation: usize, generations: usize, alpha: T) -> T {
    let r = T::from_usize_lossy(generation) / T::from_usize_lossy(generations);
    T::one() - r.powf((T::one() - r).powf(alpha))
}

/// Replaces gene `K = integer_in(index_base, 1, dims)` by a point between the
/// clamped ends of the radius window around it. Returns `K` (1-based).
#[allow(clippy::too_many_arguments)]
pub fn mutate_chromosome<T: Scalar>(
    chromosome: &mut [T],
    lower: &[T],
    upper: &[T],
    w: T,
    alpha: T,
    generation: usize,
    generations: usize,
    table: &PiFractionTable,
    index_base: u64,
) -> usize {
    let dims = chromosome.len();
    let gene = indexed_integer(table, index_base, 1, dims as i64) as usize;
    let j = gene - 1;
    let mu = mutation_radius(generation, generations, alpha);
    let half_span = mu * (upper[j] - lower[j]) / T::lit(2.0);
    let x = chromosome[j];
    let hi = (x + half_span).min(upper[j]);
    let lo = (x - half_span).max(lower[j]);
    chromosome[j] = lo + w * (hi - lo);
    gene
}

/// Overwrites slot `integer_in(k, 1, N)` with `best`; returns the slot.
pub fn elitism_insert<T: Scalar>(
    population: &mut Population<T>,
    best: &[T],
    table: &PiFractionTable,
    index: u64,
) -> usize {
    let slot = indexed_integer(table, index, 1, population.size() as i64) as usize;
    population.chromosome_mut(slot).copy_from_slice(best);
    slot
}

/// Stop when `g > 20`, `g` is a multiple of 5, and the best fitness improved
/// by at most `tol` over the last 19 generations.
pub fn early_termination_check<T: Scalar>(trace: &[T], generation: usize, tol: T) -> bool {
    generation > 20
        && generation % 5 == 0
        && generation < trace.len()
        && trace[generation] - trace[generation - 19] <= tol
}
