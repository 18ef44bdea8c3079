//! Trajectories `s_{n+1} = j_{s_n}(s_{n-1})`, holonomy, admissibility, the
//! edge partition of `K_S` and the presentation relators.

use std::collections::HashSet;

use serde::Serialize;

use crate::decorated::DecoratedGraph;
use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TrajectoryKind {
    FourCycle,
    Angle,
    SingleEdge,
    NotPeriodic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trajectory {
    pub seed: (usize, usize),
    /// `s1 ..= s6`.
    pub terms: [usize; 6],
    pub kind: TrajectoryKind,
}

impl Trajectory {
    pub fn is_four_periodic(&self) -> bool {
        self.kind != TrajectoryKind::NotPeriodic
    }

    /// One period `s1..s4`.
    pub fn period(&self) -> [usize; 4] {
        [self.terms[0], self.terms[1], self.terms[2], self.terms[3]]
    }
}

fn check_seed(g: &DecoratedGraph, s1: usize, s2: usize) -> Result<()> {
    g.labels().check_index(s1)?;
    g.labels().check_index(s2)?;
    if s1 == s2 {
        return Err(Error::DistinctLabelsRequired(g.labels().name(s1).to_string()));
    }
    Ok(())
}

/// Computes `s1..s6`. The recurrence is a map on consecutive pairs, so
/// `(s5, s6) = (s1, s2)` is equivalent to 4-periodicity of the whole sequence.
pub fn trajectory(g: &DecoratedGraph, s1: usize, s2: usize) -> Result<Trajectory> {
    check_seed(g, s1, s2)?;
    let mut terms = [s1, s2, 0, 0, 0, 0];
    for n in 2..6 {
        terms[n] = g.j(terms[n - 1], terms[n - 2]);
    }
    let kind = if (terms[4], terms[5]) != (s1, s2) {
        TrajectoryKind::NotPeriodic
    } else {
        let mut distinct = terms[..4].to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        match distinct.len() {
            2 => TrajectoryKind::SingleEdge,
            3 => TrajectoryKind::Angle,
            _ => TrajectoryKind::FourCycle,
        }
    };
    Ok(Trajectory {
        seed: (s1, s2),
        terms,
        kind,
    })
}

/// `j_{s4} ∘ j_{s3} ∘ j_{s2} ∘ j_{s1}` along a 4-periodic trajectory.
pub fn holonomy(g: &DecoratedGraph, s1: usize, s2: usize) -> Result<Permutation> {
    let t = trajectory(g, s1, s2)?;
    if !t.is_four_periodic() {
        return Err(Error::NotFourPeriodic(
            g.labels().name(s1).to_string(),
            g.labels().name(s2).to_string(),
        ));
    }
    t.period()
        .iter()
        .try_fold(Permutation::identity(g.rank()), |acc, &s| g.involution(s).compose(&acc))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FailureKind {
    NotFourPeriodic,
    Holonomy,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityFailure {
    pub seed: (usize, usize),
    pub kind: FailureKind,
    /// The nontrivial holonomy, for `Holonomy` failures.
    pub witness: Option<Permutation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub admissible: bool,
    pub failures: Vec<AdmissibilityFailure>,
}

/// Checks every ordered seed pair in label order.
pub fn is_admissible(g: &DecoratedGraph) -> AdmissibilityReport {
    let n = g.rank();
    let mut failures = Vec::new();
    for s1 in 0..n {
        for s2 in (0..n).filter(|&s2| s2 != s1) {
            match holonomy(g, s1, s2) {
                Ok(h) if h.is_identity() => {}
                Ok(h) => failures.push(AdmissibilityFailure {
                    seed: (s1, s2),
                    kind: FailureKind::Holonomy,
                    witness: Some(h),
                }),
                Err(_) => failures.push(AdmissibilityFailure {
                    seed: (s1, s2),
                    kind: FailureKind::NotFourPeriodic,
                    witness: None,
                }),
            }
        }
    }
    AdmissibilityReport {
        admissible: failures.is_empty(),
        failures,
    }
}

/// Cheap admissibility test that stops at the first failing seed.
pub fn admissible(g: &DecoratedGraph) -> bool {
    let n = g.rank();
    (0..n).all(|s1| {
        (0..n)
            .filter(|&s2| s2 != s1)
            .all(|s2| holonomy(g, s1, s2).is_ok_and(|h| h.is_identity()))
    })
}

pub(crate) fn require_admissible(g: &DecoratedGraph) -> Result<()> {
    let report = is_admissible(g);
    match report.failures.first() {
        None => Ok(()),
        Some(f) => {
            let l = g.labels();
            Err(Error::NotAdmissible(format!(
                "{} failures, first at seed ({}, {}): {:?}",
                report.failures.len(),
                l.name(f.seed.0),
                l.name(f.seed.1),
                f.kind
            )))
        }
    }
}

/// One block of the edge partition of `K_S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeGroup {
    /// Four distinct labels in cyclic order.
    FourCycle([usize; 4]),
    /// Two edges `{apex, ends.0}` and `{apex, ends.1}`.
    Angle { apex: usize, ends: (usize, usize) },
    SingleEdge(usize, usize),
}

impl EdgeGroup {
    /// Unordered edges `(min, max)` covered by this group.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let e = |u: usize, v: usize| (u.min(v), u.max(v));
        match *self {
            EdgeGroup::FourCycle(c) => (0..4).map(|i| e(c[i], c[(i + 1) % 4])).collect(),
            EdgeGroup::Angle { apex, ends } => vec![e(apex, ends.0), e(apex, ends.1)],
            EdgeGroup::SingleEdge(u, v) => vec![e(u, v)],
        }
    }

    pub fn kind(&self) -> TrajectoryKind {
        match self {
            EdgeGroup::FourCycle(_) => TrajectoryKind::FourCycle,
            EdgeGroup::Angle { .. } => TrajectoryKind::Angle,
            EdgeGroup::SingleEdge(..) => TrajectoryKind::SingleEdge,
        }
    }

    /// Canonical rendering: `□abcd`, `∠aec` (apex in the middle), `ac`.
    pub fn display(&self, g: &DecoratedGraph) -> String {
        let name = |i: usize| g.labels().name(i).as_str().to_string();
        match *self {
            EdgeGroup::FourCycle(c) => format!("□{}", c.map(name).concat()),
            EdgeGroup::Angle { apex, ends } => {
                format!("∠{}{}{}", name(ends.0), name(apex), name(ends.1))
            }
            EdgeGroup::SingleEdge(u, v) => format!("{}{}", name(u), name(v)),
        }
    }
}

fn edge_group_of(period: [usize; 4]) -> EdgeGroup {
    let [a, b, c, d] = period;
    if a == c && b == d {
        EdgeGroup::SingleEdge(a.min(b), a.max(b))
    } else if b == d {
        // u, s, v, s
        EdgeGroup::Angle {
            apex: b,
            ends: (a.min(c), a.max(c)),
        }
    } else if a == c {
        // s, u, s, w
        EdgeGroup::Angle {
            apex: a,
            ends: (b.min(d), b.max(d)),
        }
    } else {
        EdgeGroup::FourCycle(canonical_cycle(period))
    }
}

/// Least of the 8 rotations and reversals of a cyclic 4-sequence.
pub fn canonical_cycle(c: [usize; 4]) -> [usize; 4] {
    let mut best = c;
    for r in 0..4 {
        let rot = [c[r], c[(r + 1) % 4], c[(r + 2) % 4], c[(r + 3) % 4]];
        let rev = [rot[3], rot[2], rot[1], rot[0]];
        best = best.min(rot).min(rev);
    }
    best
}

/// Partitions the edges of `K_S` by the trajectories through them.
pub fn edge_partition(g: &DecoratedGraph) -> Result<Vec<EdgeGroup>> {
    let n = g.rank();
    let mut covered = HashSet::new();
    let mut groups = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if covered.contains(&(u, v)) {
                continue;
            }
            let t = trajectory(g, u, v)?;
            if !t.is_four_periodic() {
                return Err(Error::NotAdmissible(format!(
                    "trajectory seeded at ({}, {}) is not 4-periodic",
                    g.labels().name(u),
                    g.labels().name(v)
                )));
            }
            let group = edge_group_of(t.period());
            covered.extend(group.edges());
            groups.push(group);
        }
    }
    Ok(groups)
}

/// A relator word in product notation; `s^2` is stored as `[s, s]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Relator(pub Vec<usize>);

impl Relator {
    pub fn display(&self, g: &DecoratedGraph) -> String {
        match self.0.as_slice() {
            [s, t] if s == t => format!("{}^2", g.labels().name(*s)),
            w => g.labels().format_word(w),
        }
    }
}

/// `s^2` for each generator, then one 4-letter relator per trajectory class
/// under rotation and reversal, each in its lexicographically least form.
pub fn presentation_relators(g: &DecoratedGraph) -> Result<Vec<Relator>> {
    require_admissible(g)?;
    let n = g.rank();
    let mut out: Vec<Relator> = (0..n).map(|s| Relator(vec![s, s])).collect();
    let mut seen = HashSet::new();
    for s1 in 0..n {
        for s2 in (0..n).filter(|&s2| s2 != s1) {
            let t = trajectory(g, s1, s2)?;
            let c = canonical_cycle(t.period());
            if seen.insert(c) {
                out.push(Relator(c.to_vec()));
            }
        }
    }
    out[n..].sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn names(g: &DecoratedGraph, t: &Trajectory) -> String {
        t.terms.iter().map(|&i| g.labels().name(i).as_str()).collect()
    }

    #[test]
    fn five_simplex_trajectories() {
        let g = fixtures::five_simplex();
        let t = trajectory(&g, 0, 1).unwrap();
        assert_eq!(names(&g, &t), "abcdab");
        assert_eq!(t.kind, TrajectoryKind::FourCycle);
        let t = trajectory(&g, 0, 2).unwrap();
        assert_eq!(names(&g, &t), "acacac");
        assert_eq!(t.kind, TrajectoryKind::SingleEdge);
    }

    #[test]
    fn d4_angle() {
        let g = fixtures::d4();
        let t = trajectory(&g, 0, 1).unwrap();
        assert_eq!(names(&g, &t), "abacab");
        assert_eq!(t.kind, TrajectoryKind::Angle);
    }

    #[test]
    fn seed_errors() {
        let g = fixtures::d4();
        assert!(matches!(trajectory(&g, 1, 1), Err(Error::DistinctLabelsRequired(_))));
        assert!(matches!(trajectory(&g, 0, 7), Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn holonomy_cases() {
        let g = fixtures::five_simplex();
        assert!(holonomy(&g, 0, 1).unwrap().is_identity());
        let d4 = fixtures::d4();
        assert!(holonomy(&d4, 1, 2).unwrap().is_identity());
        let bad = fixtures::non_periodic_rank3();
        assert!(matches!(holonomy(&bad, 1, 0), Err(Error::NotFourPeriodic(..))));
    }

    #[test]
    fn holonomy_failure_is_reported() {
        // the first rank-4 graph in enumeration order with a holonomy failure
        let found = crate::enumerate::DecoratedGraphs::new(4)
            .unwrap()
            .map(|g| is_admissible(&g))
            .find(|r| r.failures.iter().any(|f| f.kind == FailureKind::Holonomy));
        let report = found.expect("some rank-4 graph has holonomy");
        let f = report
            .failures
            .iter()
            .find(|f| f.kind == FailureKind::Holonomy)
            .unwrap();
        assert!(!f.witness.as_ref().unwrap().is_identity());
        assert!(!report.admissible);
    }

    #[test]
    fn admissibility_fixtures() {
        assert!(is_admissible(&fixtures::d4()).admissible);
        assert!(is_admissible(&fixtures::five_simplex()).admissible);
        let r = is_admissible(&fixtures::non_periodic_rank3());
        assert!(!r.admissible);
        assert!(r.failures.iter().any(|f| f.seed == (1, 0) && f.kind == FailureKind::NotFourPeriodic));
    }

    #[test]
    fn partitions() {
        let g = fixtures::five_simplex();
        let mut got: Vec<String> = edge_partition(&g).unwrap().iter().map(|e| e.display(&g)).collect();
        got.sort();
        let mut want = vec!["□abcd", "∠aec", "∠bed", "ac", "bd"];
        want.sort();
        assert_eq!(got, want);

        let d4 = fixtures::d4();
        let got: Vec<String> = edge_partition(&d4).unwrap().iter().map(|e| e.display(&d4)).collect();
        assert_eq!(got, vec!["∠bac", "bc"]);

        let sq = DecoratedGraph::trivial(crate::label::LabelSet::alphabetic(2).unwrap());
        assert_eq!(edge_partition(&sq).unwrap(), vec![EdgeGroup::SingleEdge(0, 1)]);

        assert!(matches!(
            edge_partition(&fixtures::non_periodic_rank3()),
            Err(Error::NotAdmissible(_))
        ));
    }

    #[test]
    fn relators() {
        let g = fixtures::d4();
        let got: Vec<String> = presentation_relators(&g).unwrap().iter().map(|r| r.display(&g)).collect();
        assert_eq!(got, vec!["a^2", "b^2", "c^2", "a b a c", "b c b c"]);

        let f = fixtures::five_simplex();
        let rels = presentation_relators(&f).unwrap();
        assert!(rels.contains(&Relator(vec![0, 1, 2, 3])));

        let one = DecoratedGraph::trivial(crate::label::LabelSet::alphabetic(1).unwrap());
        assert_eq!(presentation_relators(&one).unwrap(), vec![Relator(vec![0, 0])]);
    }
}
