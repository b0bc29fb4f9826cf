//! Property suite over the corpus and seeded random braid closures.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::alexander::{
    alexander_skein_with, alexander_state_sum_with, classical_skein_check_with, SkeinBranch,
};
use crate::corpus::CORPUS;
use crate::diagram::{from_braid, Diagram};
use crate::error::Result;
use crate::faces::compute_faces;
use crate::floer::hfb_planar;
use crate::laurent::HalfLaurent;
use crate::pruning::PruningReport;
use crate::states::{
    count_states_oracle, enumerate_states, BigradedTable, CornerWeights, ORACLE_VERTEX_LIMIT,
};

/// Check names, in report order.
pub const CHECKS: [&str; 9] = [
    "golden-values",
    "method-agreement",
    "q-independence",
    "classical-skein",
    "matching-oracle",
    "pruning-connected",
    "pruning-singletons",
    "planar-diagonal",
    "chain-euler",
];

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    pub count: usize,
    pub max_crossings: usize,
    /// Weights used for every state sum; the standard table unless a
    /// negative control is being run.
    pub weights: CornerWeights,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: 7,
            count: 100,
            max_crossings: 8,
            weights: CornerWeights::standard(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub diagrams: usize,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn render(&self) -> String {
        let mut out = format!("{} diagrams\n", self.diagrams);
        for c in &self.checks {
            let verdict = if c.passed() { "PASS" } else { "FAIL" };
            writeln!(out, "{:<20} {:>6} cases {:>4} failed  {verdict}", c.name, c.cases, c.failures)
                .unwrap();
            if let Some(f) = &c.first_failure {
                writeln!(out, "    first failure: {f}").unwrap();
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "diagrams": self.diagrams,
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "cases": c.cases,
                "failures": c.failures,
                "first_failure": c.first_failure,
                "passed": c.passed(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// A connected braid closure with up to `max_crossings` letters on 2 to 4
/// strands, each letter singular with probability 1/2.
pub fn random_braid_diagram<R: Rng>(rng: &mut R, max_crossings: usize) -> Diagram {
    let max_crossings = max_crossings.max(1);
    loop {
        let strands = rng.gen_range(2..=4usize.min(max_crossings + 1));
        let len = rng.gen_range(strands - 1..=max_crossings);
        let word: Vec<i32> = (0..len)
            .map(|_| {
                let g = rng.gen_range(1..strands as i32);
                if rng.gen_bool(0.5) {
                    g
                } else {
                    -g
                }
            })
            .collect();
        let mask: BTreeSet<usize> = (1..=len).filter(|_| rng.gen_bool(0.5)).collect();
        if let Ok(d) = from_braid(strands, &word, &mask) {
            return d;
        }
    }
}

/// `count` random diagrams from `seed`; the sequence depends only on the
/// arguments.
pub fn random_suite(seed: u64, count: usize, max_crossings: usize) -> Vec<Diagram> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let d = random_braid_diagram(&mut rng, max_crossings);
            let name = format!("random#{i}:{}", d.name());
            d.with_name(name)
        })
        .collect()
}

type Outcome = Option<std::result::Result<(), String>>;

/// Per-diagram outcomes, one slot per entry of [`CHECKS`]. `None` means
/// the check does not apply.
fn check_diagram(d: &Diagram, golden: Option<&crate::corpus::CorpusEntry>, w: &CornerWeights) -> Vec<Outcome> {
    let run = || -> Result<Vec<Outcome>> {
        let delta = alexander_state_sum_with(d, w)?;
        let fail = |msg: String| Some(Err(format!("{}: {msg}", d.name())));
        let ok = Some(Ok(()));

        let golden_outcome = golden.map(|g| {
            let mut problems = Vec::new();
            if let Some(want) = g.expected_delta() {
                if want != delta {
                    problems.push(format!("delta {delta} != {want}"));
                }
            }
            if let Some(want) = g.expected_chi_hfa() {
                let ell = d.singular_count() as u32 - 1;
                let chi = &HalfLaurent::one_minus_t_power(ell) * &delta;
                if want != chi {
                    problems.push(format!("chi_hfa {chi} != {want}"));
                }
            }
            if let Some(want) = g.states {
                let f = compute_faces(d)?;
                let n = enumerate_states(d, &f).len() as u64;
                if n != want {
                    problems.push(format!("{n} states != {want}"));
                }
            }
            Ok::<_, crate::error::Error>(if problems.is_empty() {
                Ok(())
            } else {
                Err(format!("{}: {}", d.name(), problems.join("; ")))
            })
        });
        let golden_outcome = match golden_outcome {
            Some(r) => Some(r?),
            None => None,
        };

        let plus = alexander_skein_with(d, SkeinBranch::Plus, w)?;
        let minus = alexander_skein_with(d, SkeinBranch::Minus, w)?;
        let agreement = if plus == delta && minus == delta {
            ok.clone()
        } else {
            fail(format!("state sum {delta}, skein+ {plus}, skein- {minus}"))
        };

        let mut q_result = ok.clone();
        for &e in d.edges() {
            let moved = d.with_marked_edge(e)?;
            let other = alexander_state_sum_with(&moved, w)?;
            if other != delta {
                q_result = fail(format!("Q on edge {e} gives {other}, not {delta}"));
                break;
            }
        }

        let mut skein_result = ok.clone();
        for v in 0..d.num_vertices() {
            if !classical_skein_check_with(d, v, w)? {
                skein_result = fail(format!("skein identity fails at vertex {v}"));
                break;
            }
        }

        let f = compute_faces(d)?;
        let states = enumerate_states(d, &f);
        let oracle = if d.num_vertices() <= ORACLE_VERTEX_LIMIT {
            let n = count_states_oracle(d, &f)?;
            if n == states.len() as u64 {
                ok.clone()
            } else {
                fail(format!("enumerated {} states, oracle counts {n}", states.len()))
            }
        } else {
            None
        };

        let (connected, singletons, diagonal) = if d.is_planar_singular() {
            let r = PruningReport::compute(d)?;
            let connected = if r.all_connected() {
                ok.clone()
            } else {
                fail(format!("{} of {} prunings connected", r.connected, r.states))
            };
            let singletons = if r.all_singletons() {
                ok.clone()
            } else {
                fail(format!("class sizes {:?}", r.class_sizes))
            };
            let diagonal = match hfb_planar(d) {
                Ok(h) if h.ranks.entries().all(|((m, k), _)| m == k) && h.euler() == delta => {
                    ok.clone()
                }
                Ok(h) => fail(format!("ranks {} off the diagonal or euler mismatch", h.ranks.to_json())),
                Err(e) => fail(e.to_string()),
            };
            (connected, singletons, diagonal)
        } else {
            (None, None, None)
        };

        let chain = BigradedTable::from_states(&states).euler();
        let chain_result = if chain == delta {
            ok
        } else {
            fail(format!("chain euler {chain} != {delta}"))
        };

        Ok(vec![
            golden_outcome,
            agreement,
            q_result,
            skein_result,
            oracle,
            connected,
            singletons,
            diagonal,
            chain_result,
        ])
    };
    run().unwrap_or_else(|e| vec![Some(Err(format!("{}: {e}", d.name()))); CHECKS.len()])
}

pub fn run_verification(cfg: &VerifyConfig) -> VerifyReport {
    let mut cases: Vec<(Diagram, Option<&crate::corpus::CorpusEntry>)> = CORPUS
        .iter()
        .map(|e| (e.diagram().expect("corpus entry"), Some(e)))
        .collect();
    cases.extend(
        random_suite(cfg.seed, cfg.count, cfg.max_crossings)
            .into_iter()
            .map(|d| (d, None)),
    );
    let outcomes: Vec<Vec<Outcome>> = cases
        .par_iter()
        .map(|(d, g)| check_diagram(d, *g, &cfg.weights))
        .collect();

    let checks = CHECKS
        .iter()
        .enumerate()
        .map(|(i, &name)| {
            let mut r = CheckResult {
                name,
                ..Default::default()
            };
            for o in outcomes.iter().filter_map(|row| row[i].as_ref()) {
                r.cases += 1;
                if let Err(msg) = o {
                    r.failures += 1;
                    r.first_failure.get_or_insert_with(|| msg.clone());
                }
            }
            r
        })
        .collect();
    VerifyReport {
        diagrams: cases.len(),
        checks,
    }
}
