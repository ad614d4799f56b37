//! Property suites comparing the closed-form criteria with brute force:
//! partition stabilizers, partition orbits and explicit color actions.

use std::collections::HashMap;
use std::fmt::Write;
use std::sync::Arc;

use serde::Serialize;

use crate::enumerate::{
    action_equivalence_check, canonical_outside, conjugate_spec, count_type1_semiperfect, enumerate_type1,
    enumerate_type2, find_conjugating_automorphism, type1_entries_for, type1_grid, CensusEntry, Constraints,
};
use crate::error::Result;
use crate::geometry::{corollary6_check, Corollary6};
use crate::group::{FiniteGroup, GroupDescriptor, Subgroup};
use crate::partition::{classify_type1, classify_type2, type1_partition, type2_partition, GroupPartition, Verdict};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SuiteResult {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

impl SuiteResult {
    fn new(name: &str) -> Self {
        SuiteResult { name: name.to_string(), checked: 0, failed: 0, first_failure: None }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub group: String,
    pub exhaustive: bool,
    pub suites: Vec<SuiteResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("verify {}{}\n", self.group, if self.exhaustive { " (exhaustive)" } else { "" });
        for s in &self.suites {
            let _ = writeln!(
                out,
                "{:<5} {:<28} checked {:>6}  failed {}",
                if s.passed() { "PASS" } else { "FAIL" },
                s.name,
                s.checked,
                s.failed
            );
            if let Some(f) = &s.first_failure {
                let _ = writeln!(out, "      first failure: {f}");
            }
        }
        let failed = self.suites.iter().filter(|s| !s.passed()).count();
        let _ = writeln!(out, "{} suites, {} failed", self.suites.len(), failed);
        out
    }
}

fn oracle_verdict(p: &GroupPartition) -> Verdict {
    if p.stabilizer().is_whole() {
        Verdict::Perfect
    } else {
        Verdict::Semiperfect
    }
}

/// Runs every suite for each index-2 subgroup `H` of `group`. By default
/// `J` runs over conjugacy-class representatives and `r` over the canonical
/// coset representatives; `exhaustive` widens both to all subgroups of `H`
/// and all elements outside `H`.
pub fn verify_group(group: &Arc<FiniteGroup>, exhaustive: bool) -> Result<VerifyReport> {
    let mut axioms = SuiteResult::new("group-axioms");
    let mut thm5 = SuiteResult::new("type1-verdict-vs-oracle");
    let mut thm2 = SuiteResult::new("type2-verdict-vs-oracle");
    let mut thm1 = SuiteResult::new("orbit-size-and-stabilizer");
    let mut thm4 = SuiteResult::new("type1-pairing");
    let mut counts = SuiteResult::new("type1-count-formula");
    let mut thm7 = SuiteResult::new("automorphism-transfer");
    let mut cor6 = SuiteResult::new("diagram-test-soundness");

    let triples = group.check_axioms(64)?;
    axioms.checked = triples;

    let hs = if group.order().is_multiple_of(2) { group.subgroups_of_index(2)? } else { Vec::new() };
    let whole = group.whole();
    let label = |e| group.label(e).to_string();
    let is_p4m = matches!(group.descriptor(), GroupDescriptor::P4mQuotient { .. });
    let mut censuses: Vec<Vec<CensusEntry>> = Vec::new();

    for h in &hs {
        let reps = h.conjugacy_class_reps_of_subgroups(&whole)?;
        let subs = h.all_subgroups()?;
        let js: &[Subgroup] = if exhaustive { &subs } else { &reps };

        for j in js {
            let rs: Vec<_> = if exhaustive {
                group.elements().filter(|r| !h.contains(*r)).collect()
            } else {
                j.right_coset_reps_outside(h)?
            };
            for r in rs {
                let v = classify_type1(j, r, h)?;
                let o = oracle_verdict(&type1_partition(h, j, r)?);
                thm5.record(v == o, || format!("H={} J={} r={}: {v} vs oracle {o}", h.display_name(), j.display_name(), label(r)));
                if is_p4m && corollary6_check(j, r)? == Corollary6::Semiperfect {
                    cor6.record(v == Verdict::Semiperfect, || {
                        format!("H={} J={} r={}", h.display_name(), j.display_name(), label(r))
                    });
                }
            }
        }

        let ys: Vec<_> = if exhaustive {
            group.elements().filter(|y| !h.contains(*y)).collect()
        } else {
            vec![canonical_outside(h)]
        };
        for j1 in &subs {
            for j2 in &subs {
                let v = classify_type2(j1, j2)?;
                for &y in &ys {
                    let o = oracle_verdict(&type2_partition(h, j1, j2, y)?);
                    thm2.record(v == o, || {
                        format!("H={} J1={} J2={} y={}: {v} vs oracle {o}", h.display_name(), j1.display_name(), j2.display_name(), label(y))
                    });
                }
            }
        }

        for j in reps.iter().filter(|j| *j != h) {
            let grid = type1_grid(h, j)?;
            let mut classes: HashMap<&GroupPartition, usize> = HashMap::new();
            for cell in grid.iter().filter(|c| c.verdict == Verdict::Semiperfect) {
                *classes.entry(&cell.key).or_default() += 1;
            }
            let paired = whole.normalizer(j)? != h.normalizer(j)?;
            let want = if paired { 2 } else { 1 };
            let ok = classes.values().all(|&n| n == want);
            thm4.record(ok, || format!("H={} J={}: class sizes {:?}, expected {want}", h.display_name(), j.display_name(), classes.values().collect::<Vec<_>>()));
            let formula = count_type1_semiperfect(h, j)?;
            let actual = type1_entries_for(h, j)?.len();
            counts.record(formula == actual, || format!("H={} J={}: formula {formula}, census {actual}", h.display_name(), j.display_name()));
        }

        let mut census = enumerate_type2(h, &Constraints::default())?;
        census.extend(enumerate_type1(h, &Constraints::default())?);
        for e in &census {
            let p = e.spec.partition();
            let class = p.equivalence_class();
            let ok = class.len() == 2 && class.iter().all(|q| q.stabilizer() == *h);
            thm1.record(ok, || format!("H={} P={p}: orbit size {}", h.display_name(), class.len()));
        }
        censuses.push(census);
    }

    for (i, h) in hs.iter().enumerate() {
        for h_prime in &hs {
            let Some(alpha) = find_conjugating_automorphism(group, h, h_prime)? else { continue };
            for e in &censuses[i] {
                let moved = conjugate_spec(&e.spec, &alpha)?;
                let ok_partition = *moved.partition() == alpha.apply_partition(e.spec.partition());
                let ok_verdict = oracle_verdict(moved.partition()) == e.classification.verdict;
                let eq = action_equivalence_check(h, e.spec.partition(), moved.h(), moved.partition(), &alpha)?;
                thm7.record(ok_partition && ok_verdict && eq.holds, || {
                    format!("H={} -> {} via {}: P={}", h.display_name(), h_prime.display_name(), alpha.describe(), e.spec.partition())
                });
            }
        }
    }

    let mut suites = vec![axioms, thm5, thm2, thm1, thm4, counts, thm7];
    if is_p4m {
        suites.push(cor6);
    }
    Ok(VerifyReport { group: group.descriptor().to_string(), exhaustive, suites })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builders::{cyclic, dihedral, p4m_quotient};

    #[test]
    fn hexagon_passes() {
        let g = dihedral(6).unwrap();
        let report = verify_group(&g, true).unwrap();
        assert!(report.passed(), "{}", report.to_text());
        assert!(report.suites.iter().all(|s| s.checked > 0), "{}", report.to_text());
    }

    #[test]
    fn small_p4m_passes() {
        let g = p4m_quotient(2).unwrap();
        let report = verify_group(&g, false).unwrap();
        assert!(report.passed(), "{}", report.to_text());
        assert_eq!(report.suites.last().unwrap().name, "diagram-test-soundness");
    }

    #[test]
    fn trivial_group_is_vacuous() {
        let g = cyclic(1).unwrap();
        let report = verify_group(&g, false).unwrap();
        assert!(report.passed());
        assert!(report.suites.iter().skip(1).all(|s| s.checked == 0));
    }
}
