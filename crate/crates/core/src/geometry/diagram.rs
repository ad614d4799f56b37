use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::builders::{p4m_decode, square_point_group};
use crate::group::{Elem, FiniteGroup, GroupDescriptor, Subgroup};
use crate::scalar::Scalar;
use crate::{ExactIsometry, Rational};

use super::PlanarIsometry;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AxisKind {
    Mirror,
    Glide,
}

/// The line `normal · p = offset`. `normal` is primitive with its first
/// nonzero entry positive; `offset` is reduced into `[0, N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Axis {
    pub normal: [i64; 2],
    pub offset: Rational,
    pub kind: AxisKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RotationCenter {
    pub point: [Rational; 2],
    pub order: u32,
}

/// Symmetry elements of the full preimage of `J` in `p4m`, taken modulo
/// the lattice `NZ²` that the quotient divides out. Identity and
/// translations contribute nothing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryDiagram {
    pub modulus: i64,
    pub axes: BTreeSet<Axis>,
    pub centers: BTreeSet<RotationCenter>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Corollary6 {
    Semiperfect,
    Inconclusive,
}

impl std::fmt::Display for Corollary6 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Corollary6::Semiperfect => "semiperfect",
            Corollary6::Inconclusive => "inconclusive",
        })
    }
}

fn modulus_of(group: &FiniteGroup) -> Result<usize> {
    match group.descriptor() {
        GroupDescriptor::P4mQuotient { n } => Ok(*n),
        other => Err(Error::UnsupportedPattern(format!(
            "symmetry diagrams need a p4m quotient, got {other}"
        ))),
    }
}

/// The isometry `(M, t)` with `t` in `[0, N)²` representing `g`.
pub fn lift_p4m(group: &FiniteGroup, g: Elem) -> Result<ExactIsometry> {
    let n = modulus_of(group)?;
    let c = p4m_decode(n, g.index());
    Ok(PlanarIsometry::from_int(&square_point_group()[c.point], c.t))
}

fn reduce(x: Rational, m: i64) -> Rational {
    x.rem_floor(Rational::from_integer(m))
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn canonical_normal(n: [i64; 2], offset: Rational) -> ([i64; 2], Rational) {
    let g = gcd(n[0], n[1]);
    let (mut n, mut offset) = ([n[0] / g, n[1] / g], offset / Rational::from_integer(g));
    if n[0] < 0 || (n[0] == 0 && n[1] < 0) {
        n = [-n[0], -n[1]];
        offset = -offset;
    }
    (n, offset)
}

fn int_vec(v: [Rational; 2]) -> [i64; 2] {
    debug_assert!(v[0].is_integer() && v[1].is_integer());
    [v[0].to_integer(), v[1].to_integer()]
}

fn dot(n: [i64; 2], p: [Rational; 2]) -> Rational {
    p[0] * Rational::from_integer(n[0]) + p[1] * Rational::from_integer(n[1])
}

impl SymmetryDiagram {
    fn empty(modulus: i64) -> Self {
        SymmetryDiagram { modulus, axes: BTreeSet::new(), centers: BTreeSet::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.axes.is_empty() && self.centers.is_empty()
    }

    /// Rationals are written as `"p/q"` strings.
    pub fn to_json(&self) -> serde_json::Value {
        let axes: Vec<_> = self
            .axes
            .iter()
            .map(|a| serde_json::json!({"normal": a.normal, "offset": a.offset.to_string(), "kind": a.kind}))
            .collect();
        let centers: Vec<_> = self
            .centers
            .iter()
            .map(|c| serde_json::json!({"point": [c.point[0].to_string(), c.point[1].to_string()], "order": c.order}))
            .collect();
        serde_json::json!({"modulus": self.modulus, "axes": axes, "centers": centers})
    }

    /// Adds the fixed line or center of one lifted isometry.
    fn add(&mut self, iso: &ExactIsometry, lines: &mut BTreeMap<([i64; 2], Rational), bool>, rot: &mut BTreeMap<[Rational; 2], u32>) {
        let m = iso.linear;
        let t = iso.translation;
        let one = Rational::one();
        let zero = Rational::zero();
        if iso.det() < zero {
            // M - I maps the normal to -2·normal and kills the axis direction
            let cols = [[m[0][0] - one, m[1][0]], [m[0][1], m[1][1] - one]];
            let raw = if cols[0] != [zero, zero] { cols[0] } else { cols[1] };
            let normal = int_vec(raw);
            let (normal, _) = canonical_normal(normal, zero);
            let dir = [-normal[1], normal[0]];
            let offset = reduce(dot(normal, t) * Rational::half(), self.modulus);
            let pure = dot(dir, t).is_zero();
            *lines.entry((normal, offset)).or_insert(false) |= pure;
        } else if m != [[one, zero], [zero, one]] {
            // solve (I - M) c = t
            let a = [[one - m[0][0], -m[0][1]], [-m[1][0], one - m[1][1]]];
            let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
            let c = [
                (a[1][1] * t[0] - a[0][1] * t[1]) / det,
                (a[0][0] * t[1] - a[1][0] * t[0]) / det,
            ];
            let c = [reduce(c[0], self.modulus), reduce(c[1], self.modulus)];
            let order = if m[0][0] == -one { 2 } else { 4 };
            let e = rot.entry(c).or_insert(order);
            *e = (*e).max(order);
        }
    }

    fn finish(mut self, lines: BTreeMap<([i64; 2], Rational), bool>, rot: BTreeMap<[Rational; 2], u32>) -> Self {
        self.axes = lines
            .into_iter()
            .map(|((normal, offset), pure)| Axis {
                normal,
                offset,
                kind: if pure { AxisKind::Mirror } else { AxisKind::Glide },
            })
            .collect();
        self.centers = rot.into_iter().map(|(point, order)| RotationCenter { point, order }).collect();
        self
    }

    /// Image under an exact isometry that normalizes the lattice `NZ²`.
    pub fn transform(&self, iso: &ExactIsometry) -> SymmetryDiagram {
        let mut out = SymmetryDiagram::empty(self.modulus);
        let s = iso.translation;
        for axis in &self.axes {
            let n = int_vec(iso.apply_linear([Rational::from_integer(axis.normal[0]), Rational::from_integer(axis.normal[1])]));
            let (n, offset) = canonical_normal(n, axis.offset + dot(n, s));
            out.axes.insert(Axis { normal: n, offset: reduce(offset, self.modulus), kind: axis.kind });
        }
        for c in &self.centers {
            let p = iso.apply(c.point);
            out.centers.insert(RotationCenter {
                point: [reduce(p[0], self.modulus), reduce(p[1], self.modulus)],
                order: c.order,
            });
        }
        out
    }
}

/// `D(J)` for a subgroup of a `p4m` quotient. Every element is lifted with
/// translation in `[0, N)²` and combined with lattice vectors `N·k`,
/// `k ∈ [-2, 2]²`; that window already meets every class of axis and
/// center modulo `NZ²`.
pub fn diagram(j: &Subgroup) -> Result<SymmetryDiagram> {
    let group = j.group();
    let n = modulus_of(group)? as i64;
    let mut out = SymmetryDiagram::empty(n);
    let mut lines = BTreeMap::new();
    let mut rot = BTreeMap::new();
    for &g in j.members() {
        let base = lift_p4m(group, g)?;
        for k0 in -2..=2 {
            for k1 in -2..=2 {
                let shift = PlanarIsometry::from_int(&[[1, 0], [0, 1]], [n * k0, n * k1]);
                out.add(&shift.compose(&base), &mut lines, &mut rot);
            }
        }
    }
    Ok(out.finish(lines, rot))
}

/// "semiperfect" when `r·D(J) ≠ D(J)`; otherwise the test says nothing.
pub fn corollary6_check(j: &Subgroup, r: Elem) -> Result<Corollary6> {
    let d = diagram(j)?;
    let moved = d.transform(&lift_p4m(j.group(), r)?);
    Ok(if moved != d { Corollary6::Semiperfect } else { Corollary6::Inconclusive })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builders::{dihedral, p4m_quotient};
    use crate::partition::{classify_type1, Verdict};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn diagonal_mirrors_are_moved_by_a2b() {
        let g = p4m_quotient(2).unwrap();
        let j = g.subgroup_from_words("a3b,xy,Xy").unwrap();
        let d = diagram(&j).unwrap();
        // every mirror of J runs along the direction (1, -1)
        assert!(d.axes.iter().filter(|a| a.kind == AxisKind::Mirror).all(|a| a.normal == [1, 1]));
        assert!(d.axes.iter().any(|a| a.kind == AxisKind::Mirror));
        let r = g.parse_element("a2b").unwrap();
        assert_eq!(corollary6_check(&j, r).unwrap(), Corollary6::Semiperfect);
    }

    #[test]
    fn translations_have_empty_diagram() {
        let g = p4m_quotient(2).unwrap();
        let j = g.subgroup_from_words("x,y").unwrap();
        assert!(diagram(&j).unwrap().is_empty());
        for r in g.elements() {
            assert_eq!(corollary6_check(&j, r).unwrap(), Corollary6::Inconclusive);
        }
    }

    #[test]
    fn pmm_mirrors_and_centers() {
        let g = p4m_quotient(2).unwrap();
        let j = g.subgroup_from_words("b,a2b,x,y").unwrap();
        let d = diagram(&j).unwrap();
        // with unit translations present, mirrors sit on every half-integer line
        let mut want = BTreeSet::new();
        for normal in [[1, 0], [0, 1]] {
            for k in 0..4 {
                want.insert(Axis { normal, offset: q(k, 2), kind: AxisKind::Mirror });
            }
        }
        assert_eq!(d.axes, want);
        assert_eq!(d.centers.len(), 16);
        assert!(d.centers.iter().all(|c| c.order == 2 && c.point[0].denom() <= &2 && c.point[1].denom() <= &2));
        assert!(d.centers.contains(&RotationCenter { point: [q(1, 2), q(0, 1)], order: 2 }));
    }

    #[test]
    fn conjugation_moves_the_diagram() {
        let g = p4m_quotient(2).unwrap();
        for words in ["a3b,xy,Xy", "b,a2b,x,y", "a,x2", "xa2b,xy,xY", "ab"] {
            let j = g.subgroup_from_words(words).unwrap();
            let d = diagram(&j).unwrap();
            for r in g.elements() {
                let lhs = diagram(&j.conjugate(r)).unwrap();
                assert_eq!(lhs, d.transform(&lift_p4m(&g, r).unwrap()), "J = <{words}>");
            }
        }
    }

    #[test]
    fn lattice_translation_leaves_diagram_fixed() {
        let g = p4m_quotient(2).unwrap();
        let j = g.subgroup_from_words("a3b,xy,Xy").unwrap();
        let d = diagram(&j).unwrap();
        let shift = PlanarIsometry::from_int(&[[1, 0], [0, 1]], [2, -4]);
        assert_eq!(d.transform(&shift), d);
    }

    #[test]
    fn corollary_is_sound_on_small_quotient() {
        let g = p4m_quotient(2).unwrap();
        let h = g.subgroup_from_words("a,x,y").unwrap();
        let subs = g.all_subgroups().unwrap();
        for j in subs.iter().filter(|s| s.is_subgroup_of(&h)) {
            for r in g.elements().filter(|r| !h.contains(*r)) {
                if corollary6_check(j, r).unwrap() == Corollary6::Semiperfect {
                    assert_eq!(classify_type1(j, r, &h).unwrap(), Verdict::Semiperfect);
                }
            }
        }
    }

    #[test]
    fn non_quotient_is_unsupported() {
        let g = dihedral(6).unwrap();
        let err = diagram(&g.whole()).unwrap_err();
        assert!(matches!(err, Error::UnsupportedPattern(_)));
    }
}
