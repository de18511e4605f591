use super::operators::{
    crossover_children, early_termination_check, elitism_insert, init_population,
    mutate_chromosome, select_parents, ChildRanker, Population,
};
use super::{GasrConfig, GasrError, GasrRunResult};
use crate::benchmarks::Objective;
use crate::table::PiFractionTable;
use crate::Scalar;

/// Runs the GA to completion or early termination. Only the previous and the
/// current generation are kept in memory.
pub fn run<T: Scalar, O: Objective<T>>(
    config: &GasrConfig<T>,
    objective: &O,
    table: &PiFractionTable,
) -> Result<GasrRunResult<T>, GasrError> {
    config.validate()?;
    let n = config.population;
    let big_g = config.generations;
    let off = config.index_offset;
    let (lower, upper) = (objective.lower(), objective.upper());
    let gate = |k: u64| T::lit(table.value(crate::sampling::wrap_index(k, table.count())));

    let mut prev = init_population(config, objective, table);
    let mut evaluations = n as u64;
    let (first, first_fit) = prev.best();
    let mut best_fitness = first_fit;
    let mut best_chromosome = prev.chromosome(first).to_vec();
    let mut best_generation = 0;
    let mut trace = Vec::with_capacity(big_g + 1);
    trace.push(best_fitness);
    let mut terminated_early = false;
    let mut last_generation = big_g;
    let mut ranker = ChildRanker::new(config.child_ranking);

    for g in 1..=big_g {
        let mut cur = Population::new(n, prev.dims(), g);
        for c in (1..n).step_by(2) {
            let u = gate((c + g) as u64 + off);
            if u <= config.crossover_probability {
                let p = select_parents(table, n, c as u64 + off)?;
                let kids = crossover_children(
                    prev.chromosome(p.s),
                    prev.chromosome(p.t),
                    lower,
                    upper,
                    config.w,
                );
                let fit: [T; 4] = std::array::from_fn(|i| objective.evaluate(&kids[i]));
                evaluations += 4;
                let (a, b) = ranker.rank(&fit);
                cur.chromosome_mut(c).copy_from_slice(&kids[a]);
                cur.chromosome_mut(c + 1).copy_from_slice(&kids[b]);
            } else {
                cur.chromosome_mut(c).copy_from_slice(prev.chromosome(c));
                cur.chromosome_mut(c + 1)
                    .copy_from_slice(prev.chromosome(c + 1));
            }
            if u <= config.mutation_probability {
                for (slot, base) in [(c, c + g), (c + 1, c + 1 + g)] {
                    mutate_chromosome(
                        cur.chromosome_mut(slot),
                        lower,
                        upper,
                        config.w,
                        config.alpha,
                        g,
                        big_g,
                        table,
                        base as u64 + off,
                    );
                }
            }
        }
        elitism_insert(&mut cur, &best_chromosome, table, g as u64 + off);

        for c in 1..=n {
            let f = objective.evaluate(cur.chromosome(c));
            cur.fitness[c - 1] = f;
            if f >= best_fitness {
                best_fitness = f;
                best_chromosome.copy_from_slice(cur.chromosome(c));
                best_generation = g;
            }
        }
        evaluations += n as u64;
        trace.push(best_fitness);
        prev = cur;

        if config.early_termination && early_termination_check(&trace, g, config.tol) {
            terminated_early = true;
            last_generation = g;
            break;
        }
    }

    Ok(GasrRunResult {
        best_fitness,
        best_chromosome,
        best_generation,
        evaluations,
        trace,
        terminated_early,
        last_generation,
    })
}
