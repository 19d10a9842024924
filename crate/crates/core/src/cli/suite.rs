//! Self-check suites over the enumerated cubic corpus.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::{enumerate_cubic, random_subcubic, Graph, CUBIC_ENUMERATION_NOTE};
use crate::solver::{enumerate_two_factors, resistance_exact, solve_exact};
use crate::structure::{classify_delta_edges, parity_signature};

/// Orders covered by the suites.
pub const SUITE_ORDERS: [usize; 4] = [4, 6, 8, 10];

/// Connected cubic graphs on 4, 6, 8 and 10 vertices, up to isomorphism.
const KNOWN_CUBIC_COUNTS: [usize; 4] = [1, 2, 5, 19];

/// Random subcubic graphs added to the resistance suite for each order.
const RANDOM_PER_ORDER: u64 = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteLine {
    pub suite: &'static str,
    pub n: usize,
    pub checked: usize,
    pub failures: usize,
    pub verdict: Verdict,
}

impl fmt::Display for SuiteLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match self.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
            Verdict::Skipped => "skipped",
        };
        write!(
            f,
            "{:<18} n={:<3} checked={:<4} failures={:<3} {verdict}",
            self.suite, self.n, self.checked, self.failures
        )
    }
}

fn tally(suite: &'static str, n: usize, outcomes: Vec<bool>) -> SuiteLine {
    let failures = outcomes.iter().filter(|ok| !**ok).count();
    SuiteLine {
        suite,
        n,
        checked: outcomes.len(),
        failures,
        verdict: if failures == 0 {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
    }
}

fn skipped(suite: &'static str, n: usize) -> SuiteLine {
    SuiteLine {
        suite,
        n,
        checked: 0,
        failures: 0,
        verdict: Verdict::Skipped,
    }
}

fn two_factor_bound(g: &Graph) -> bool {
    let s = solve_exact(g).s_value;
    enumerate_two_factors(g).is_ok_and(|fs| fs.iter().all(|f| f.odd_cycle_count() >= s))
}

fn parity(g: &Graph) -> bool {
    let r = solve_exact(g);
    classify_delta_edges(&r.witness)
        .ok()
        .and_then(|cl| parity_signature(&cl).ok())
        .is_some_and(|p| p.parity_ok)
}

fn resistance(g: &Graph) -> bool {
    resistance_exact(g) == solve_exact(g).s_value
}

/// Runs every suite for each order in [`SUITE_ORDERS`]. Suites that need the
/// exact solver are skipped for orders above `exact_limit`. The seed only
/// picks the random graphs, so verdicts do not depend on it.
pub fn run_suites(exact_limit: usize, seed: u64) -> Vec<SuiteLine> {
    let mut lines = Vec::new();
    for (k, &n) in SUITE_ORDERS.iter().enumerate() {
        let corpus = enumerate_cubic(n).expect("suite orders are valid");
        let mut enumeration: Vec<bool> = corpus
            .iter()
            .map(|g| g.is_cubic() && g.is_connected())
            .collect();
        enumeration.push(corpus.len() == KNOWN_CUBIC_COUNTS[k]);
        lines.push(tally("enumeration", n, enumeration));

        if n > exact_limit {
            for suite in ["two_factor_bound", "parity", "resistance"] {
                lines.push(skipped(suite, n));
            }
            continue;
        }
        lines.push(tally(
            "two_factor_bound",
            n,
            corpus.par_iter().map(two_factor_bound).collect(),
        ));
        lines.push(tally("parity", n, corpus.par_iter().map(parity).collect()));
        let random: Vec<Graph> = (0..RANDOM_PER_ORDER)
            .map(|i| random_subcubic(n, seed.wrapping_add(i).wrapping_add(1000 * n as u64)))
            .collect();
        lines.push(tally(
            "resistance",
            n,
            corpus
                .par_iter()
                .chain(random.par_iter())
                .map(resistance)
                .collect(),
        ));
    }
    lines
}

pub fn corpus_note() -> String {
    format!("corpus: {CUBIC_ENUMERATION_NOTE}")
}
