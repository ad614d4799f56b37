use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, GroupDescriptor};
use crate::RenderIsometry;

use super::diagram::lift_p4m;
use super::PlanarIsometry;

pub type Polygon = Vec<[f64; 2]>;

/// Largest coordinate error accepted by the equivariance checks.
pub const EQUIVARIANCE_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Pattern {
    /// `D6` acting on a regular hexagon of circumradius 1.
    Hexagon,
    /// A `p4m` quotient; one cell block is the square `[0, N)²`.
    P4m { n: usize },
}

/// One polygon per group element, `polygon(g) = T(g)(polygon(e))`.
///
/// Hexagon: tile `e` is the triangle on the center, the vertex at angle 0°
/// and the edge midpoint at 30°; `a` rotates by 60° and `b` reflects in the
/// x-axis. The fundamental domain of `e` is the 0°..30° wedge.
///
/// p4m: tile `e` is the triangle `(0,0), (1/2,0), (1/2,1/2)`, moved by the
/// lift `(M, t)` with `t ∈ [0, N)²`; it is also the fundamental domain.
#[derive(Clone, Debug)]
pub struct TileMap {
    group: Arc<FiniteGroup>,
    pattern: Pattern,
    transforms: Vec<RenderIsometry>,
    domains: Vec<Polygon>,
    anchor: [f64; 2],
}

fn hexagon_transform(index: usize) -> RenderIsometry {
    let (i, j) = (index % 6, index / 6);
    let rot = PlanarIsometry::rotation(60.0 * i as f64);
    if j == 1 {
        rot.compose(&PlanarIsometry::reflection(0.0))
    } else {
        rot
    }
}

fn close(p: [f64; 2], q: [f64; 2]) -> bool {
    (p[0] - q[0]).abs() <= EQUIVARIANCE_TOLERANCE && (p[1] - q[1]).abs() <= EQUIVARIANCE_TOLERANCE
}

impl TileMap {
    pub fn for_group(group: &Arc<FiniteGroup>) -> Result<Self> {
        match group.descriptor() {
            GroupDescriptor::Dihedral { n: 6 } => Ok(Self::hexagon(group)),
            GroupDescriptor::P4mQuotient { n } => Self::p4m(group, *n),
            other => Err(Error::UnsupportedPattern(format!("no tile pattern for {other}"))),
        }
    }

    fn hexagon(group: &Arc<FiniteGroup>) -> Self {
        let (s30, c30) = 30f64.to_radians().sin_cos();
        let base = vec![[0.0, 0.0], [1.0, 0.0], [c30 * c30, c30 * s30]];
        let (s15, c15) = 15f64.to_radians().sin_cos();
        let transforms: Vec<RenderIsometry> = (0..12).map(hexagon_transform).collect();
        Self::build(group, Pattern::Hexagon, transforms, base, [0.5 * c15, 0.5 * s15])
    }

    fn p4m(group: &Arc<FiniteGroup>, n: usize) -> Result<Self> {
        let transforms = group
            .elements()
            .map(|g| Ok(lift_p4m(group, g)?.to_f64()))
            .collect::<Result<Vec<_>>>()?;
        let base = vec![[0.0, 0.0], [0.5, 0.0], [0.5, 0.5]];
        Ok(Self::build(group, Pattern::P4m { n }, transforms, base, [1.0 / 3.0, 1.0 / 6.0]))
    }

    fn build(group: &Arc<FiniteGroup>, pattern: Pattern, transforms: Vec<RenderIsometry>, base: Polygon, anchor: [f64; 2]) -> Self {
        let domains = transforms.iter().map(|t| base.iter().map(|&p| t.apply(p)).collect()).collect();
        TileMap { group: group.clone(), pattern, transforms, domains, anchor }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn pattern(&self) -> Pattern {
        self.pattern
    }

    pub fn transform(&self, g: Elem) -> &RenderIsometry {
        &self.transforms[g.index()]
    }

    pub fn polygon(&self, g: Elem) -> &Polygon {
        &self.domains[g.index()]
    }

    pub fn base_domain(&self) -> &Polygon {
        &self.domains[0]
    }

    /// A point inside the fundamental domain of `g`.
    pub fn anchor(&self, g: Elem) -> [f64; 2] {
        self.transform(g).apply(self.anchor)
    }

    fn period(&self) -> Option<f64> {
        match self.pattern {
            Pattern::Hexagon => None,
            Pattern::P4m { n } => Some(n as f64),
        }
    }

    /// Equality of point lists, up to one common lattice shift for p4m.
    fn same_points(&self, p: &[[f64; 2]], q: &[[f64; 2]]) -> bool {
        if p.len() != q.len() || p.is_empty() {
            return p.len() == q.len();
        }
        let mut shift = [0.0, 0.0];
        if let Some(m) = self.period() {
            for k in 0..2 {
                shift[k] = ((q[0][k] - p[0][k]) / m).round() * m;
            }
        }
        p.iter().zip(q).all(|(a, b)| close([a[0] + shift[0], a[1] + shift[1]], *b))
    }

    /// Checks `polygon(gh) = T(g)(polygon(h))` for all pairs.
    pub fn check_equivariance(&self) -> Result<()> {
        for g in self.group.elements() {
            let t = self.transform(g);
            for h in self.group.elements() {
                let moved: Polygon = self.polygon(h).iter().map(|&p| t.apply(p)).collect();
                if !self.same_points(&moved, self.polygon(self.group.mul(g, h))) {
                    return Err(Error::invalid(format!(
                        "tile map is not equivariant at g = {}, h = {}",
                        self.group.label(g),
                        self.group.label(h)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Whether the isometry `iso` carries the domain of every `g` onto the
    /// domain of `images[g]`.
    pub fn realizes_permutation(&self, iso: &RenderIsometry, images: &[Elem]) -> bool {
        images.len() == self.group.order()
            && self.group.elements().all(|g| {
                self.same_points(&[iso.apply(self.anchor(g))], &[self.anchor(images[g.index()])])
            })
    }

    /// Hexagon tiles counterclockwise from `e`; p4m tiles in canonical order.
    pub fn display_order(&self) -> Vec<Elem> {
        let mut order: Vec<Elem> = self.group.elements().collect();
        if self.pattern == Pattern::Hexagon {
            let angle = |g: Elem| {
                let p = self.anchor(g);
                p[1].atan2(p[0]).rem_euclid(std::f64::consts::TAU)
            };
            order.sort_by(|&x, &y| angle(x).total_cmp(&angle(y)));
        }
        order
    }

    /// `{label: [[x, y], ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let map = self
            .group
            .elements()
            .map(|g| (self.group.label(g).to_string(), serde_json::json!(self.polygon(g))))
            .collect::<serde_json::Map<_, _>>();
        serde_json::Value::Object(map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builders::{cyclic, dihedral, p4m_quotient};
    use crate::enumerate::GroupAutomorphism;

    #[test]
    fn hexagon_is_equivariant_and_ordered() {
        let g = dihedral(6).unwrap();
        let map = TileMap::for_group(&g).unwrap();
        map.check_equivariance().unwrap();
        let order: Vec<&str> = map.display_order().into_iter().map(|e| g.label(e)).collect();
        assert_eq!(order, ["e", "ab", "a", "a^2b", "a^2", "a^3b", "a^3", "a^4b", "a^4", "a^5b", "a^5", "b"]);
        assert_eq!(map.to_json().as_object().unwrap().len(), 12);
    }

    #[test]
    fn p4m_is_equivariant_mod_lattice() {
        for n in 1..=3 {
            let g = p4m_quotient(n).unwrap();
            let map = TileMap::for_group(&g).unwrap();
            assert_eq!(map.to_json().as_object().unwrap().len(), 8 * n * n);
            map.check_equivariance().unwrap();
        }
    }

    #[test]
    fn hexagon_alpha_is_the_bisector_reflection() {
        let g = dihedral(6).unwrap();
        let map = TileMap::for_group(&g).unwrap();
        let alpha = GroupAutomorphism::parse(&g, "a->a5,b->ab").unwrap();
        let sigma = PlanarIsometry::reflection(15.0);
        assert!(map.realizes_permutation(&sigma, alpha.images()));
        assert!(!map.realizes_permutation(&PlanarIsometry::reflection(0.0), alpha.images()));
    }

    #[test]
    fn p4m_alpha_is_the_diagonal_reflection() {
        let g = p4m_quotient(4).unwrap();
        let map = TileMap::for_group(&g).unwrap();
        let alpha = GroupAutomorphism::parse(&g, "a->ya3,b->xa2b,x->Y,y->X").unwrap();
        let sigma = PlanarIsometry::new([[0.0, -1.0], [-1.0, 0.0]], [0.5, 0.5]);
        assert!(map.realizes_permutation(&sigma, alpha.images()));
        // it fixes the base domain as a set
        let moved: Vec<[f64; 2]> = map.base_domain().iter().map(|&p| sigma.apply(p)).collect();
        for p in map.base_domain() {
            assert!(moved.iter().any(|q| close(*p, *q)));
        }
    }

    #[test]
    fn other_groups_have_no_pattern() {
        assert!(TileMap::for_group(&cyclic(4).unwrap()).is_err());
        assert!(TileMap::for_group(&dihedral(4).unwrap()).is_err());
    }
}
