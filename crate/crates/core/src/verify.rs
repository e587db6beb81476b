//! Invariant checks over fixtures and random instances, with pass counts.

use std::fmt;

use crate::bbs::{
    box_label_carrier, box_label_step, carrier_pass, carrier_step, original_step, q_evolve,
    reduce_advanced_to_standard, reduce_generalized_to_advanced, reverse_step, CapacityProfile,
    Carrier, State,
};
use crate::knuth::{elementary_moves, knuth_equivalent};
use crate::oracle::{
    bfs_knuth_equivalent, naive_original_step, Reachability, DEFAULT_MAX_FRONTIER,
};
use crate::rsk::{inverse_rsk, matrix_of, rsk};
use crate::sample::{self, random_biword, random_twin_states};
use crate::tableau::tab;
use crate::{Color, Letter};

#[derive(Debug, Clone, Default)]
pub struct Report {
    rows: Vec<Row>,
}

#[derive(Debug, Clone)]
struct Row {
    name: &'static str,
    passed: usize,
    total: usize,
    first_failure: Option<String>,
}

impl Report {
    pub fn record(&mut self, name: &'static str, ok: bool, context: impl FnOnce() -> String) {
        let row = match self.rows.iter().position(|r| r.name == name) {
            Some(i) => &mut self.rows[i],
            None => {
                self.rows.push(Row {
                    name,
                    passed: 0,
                    total: 0,
                    first_failure: None,
                });
                self.rows.last_mut().expect("just pushed")
            }
        };
        row.total += 1;
        if ok {
            row.passed += 1;
        } else if row.first_failure.is_none() {
            row.first_failure = Some(context());
        }
    }

    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed == r.total)
    }

    pub fn total(&self) -> usize {
        self.rows.iter().map(|r| r.total).sum()
    }

    pub fn failed(&self) -> usize {
        self.rows.iter().map(|r| r.total - r.passed).sum()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let tag = if r.passed == r.total { "PASS" } else { "FAIL" };
            writeln!(f, "{tag} {:<24} {}/{}", r.name, r.passed, r.total)?;
            if let Some(why) = &r.first_failure {
                writeln!(f, "     first failure: {why}")?;
            }
        }
        let verdict = if self.all_passed() { "ok" } else { "FAILED" };
        writeln!(
            f,
            "{verdict}: {} checks, {} failed",
            self.total(),
            self.failed()
        )
    }
}

fn knuth_consistent(carrier: &Carrier, word: &[Letter]) -> bool {
    let (out, last) = match carrier_pass(carrier, word) {
        Ok(r) => r,
        Err(_) => return false,
    };
    let before: Vec<Letter> = carrier.load().iter().chain(word).copied().collect();
    let after: Vec<Letter> = out.iter().chain(last.load()).copied().collect();
    tab(&before) == tab(&after)
}

/// Every per-state invariant, over `steps` steps from `s`.
pub fn check_state(report: &mut Report, s: &State, steps: usize) {
    let p0 = s.p_symbol();
    let mut current = s.clone();
    for _ in 0..steps {
        let next = original_step(&current);
        let shown = || format!("{current:?}");

        report.record("carrier = original", carrier_step(&current) == next, shown);
        report.record(
            "naive = original",
            naive_original_step(&current) == next,
            shown,
        );
        report.record("reverse after step", reverse_step(&next) == current, shown);
        report.record("P conserved", next.p_symbol() == p0, shown);

        if let Some((p, q)) = current.window() {
            let e = current.sentinel();
            let word: Vec<Letter> = current
                .slots(p, q)
                .iter()
                .map(|c| c.ball.map_or(e, Letter::from))
                .collect();
            let slot_carrier = Carrier::filled(e, current.ball_count());
            report.record(
                "carrier Knuth (slots)",
                knuth_consistent(&slot_carrier, &word),
                shown,
            );

            let labels = box_label_carrier(&current).expect("nonempty state");
            let b = current.box_label_sequence();
            report.record(
                "carrier Knuth (labels)",
                knuth_consistent(&labels, &b),
                shown,
            );

            let (b2, _) = box_label_step(&current).expect("nonempty state");
            report.record("box labels", b2 == next.box_label_sequence(), shown);

            let q2 = q_evolve(&current.q_symbol(), &current).expect("nonempty state");
            report.record("Q evolution", q2 == next.q_symbol(), shown);
        }

        report.record(
            "reduction commutes",
            reduction_commutes(&current, &next),
            shown,
        );
        current = next;
    }
}

/// Generalized step versus reduce, standard step, restore.
pub fn reduction_commutes(s: &State, next: &State) -> bool {
    let Ok((advanced, slots)) = reduce_generalized_to_advanced(&s.to_biword(), s.capacities())
    else {
        return false;
    };
    let (standard, colors) = reduce_advanced_to_standard(&advanced);
    let n = standard.len() as Color;
    let Ok(standard_state) = State::from_biword(&standard, CapacityProfile::unit(), n.max(1))
    else {
        return false;
    };
    let stepped = original_step(&standard_state).to_biword();
    slots.restore(&colors.restore(&stepped)) == next.to_biword()
}

/// Random states, bi-words, twin states and words, all from one seed.
pub fn check_random(report: &mut Report, seed: u64, cases: usize, steps: usize) {
    for s in sample::random_corpus(seed, cases) {
        check_state(report, &s, steps);
    }
    let mut rng = sample::rng(seed ^ 0x5eed);
    for _ in 0..cases {
        let bw = random_biword(&mut rng, 10, 6);
        let (p, q) = rsk(&bw);
        let shown = || format!("{bw:?}");
        report.record(
            "RSK round trip",
            inverse_rsk(&p, &q).as_ref() == Ok(&bw),
            shown,
        );
        report.record(
            "RSK symmetry",
            rsk(&bw.dual()) == (q.clone(), p.clone()),
            shown,
        );
        report.record("dual involution", bw.dual().dual() == bw, shown);
        report.record(
            "matrix transpose",
            matrix_of(&bw.dual()) == matrix_of(&bw).transpose(),
            shown,
        );
    }
    for _ in 0..cases {
        let twins = random_twin_states(&mut rng);
        let a = original_step(&twins.first);
        let b = original_step(&twins.second);
        let shown = || format!("{twins:?}");
        report.record("Q independent of P", a.q_symbol() == b.q_symbol(), shown);
    }
    for _ in 0..cases {
        use rand::Rng;
        let len = rng.gen_range(0..=7);
        let a: Vec<Letter> = (0..len).map(|_| rng.gen_range(1..=4)).collect();
        let mut b = a.clone();
        // half the time walk a few moves, so equivalent pairs are common
        if rng.gen_bool(0.5) {
            for _ in 0..rng.gen_range(1..=6) {
                let moves: Vec<_> = elementary_moves(&b).into_iter().collect();
                if moves.is_empty() {
                    break;
                }
                b = moves[rng.gen_range(0..moves.len())].clone();
            }
        } else {
            use rand::seq::SliceRandom;
            b.shuffle(&mut rng);
        }
        let by_search = bfs_knuth_equivalent(&a, &b, DEFAULT_MAX_FRONTIER);
        let agrees = match by_search {
            Reachability::Reachable => knuth_equivalent(&a, &b),
            Reachability::Unreachable => !knuth_equivalent(&a, &b),
            Reachability::Inconclusive => true,
        };
        report.record("Knuth search agrees", agrees, || format!("{a:?} {b:?}"));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_passes() {
        let mut r = Report::default();
        check_random(&mut r, 7, 0, 10);
        assert!(r.all_passed());
        assert_eq!(r.total(), 0);
        assert!(r.to_string().starts_with("ok: 0 checks"));
    }

    #[test]
    fn failures_are_counted() {
        let mut r = Report::default();
        r.record("x", true, String::new);
        r.record("x", false, || "boom".into());
        assert!(!r.all_passed());
        assert_eq!(r.failed(), 1);
        assert!(r.to_string().contains("first failure: boom"));
    }

    #[test]
    fn small_random_run() {
        let mut r = Report::default();
        check_random(&mut r, 3, 30, 3);
        assert!(r.all_passed(), "{r}");
    }
}
