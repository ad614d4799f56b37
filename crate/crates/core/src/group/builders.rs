//! Concrete group constructions.
//!
//! Canonical orders:
//! - dihedral `D_n`: `e < a < … < a^{n-1} < b < ab < … < a^{n-1}b`
//! - `p4m` quotient: lexicographic on (point-group index, t) where the point
//!   group is listed as `e, a, a², a³, b, ab, a²b, a³b` and `t = (i, j)` with
//!   `0 ≤ i, j < N`.

use std::sync::Arc;

use super::{FiniteGroup, GroupDescriptor};
use crate::error::{Error, Result};
use crate::word::Word;

/// 2×2 integer matrix, row-major.
pub type IntMatrix = [[i64; 2]; 2];

/// 90° counterclockwise rotation.
pub const ROT90: IntMatrix = [[0, -1], [1, 0]];
/// Reflection in the horizontal axis.
pub const MIRROR_H: IntMatrix = [[1, 0], [0, -1]];

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let mut out = [[0; 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

pub fn mat_vec(a: &IntMatrix, v: [i64; 2]) -> [i64; 2] {
    [a[0][0] * v[0] + a[0][1] * v[1], a[1][0] * v[0] + a[1][1] * v[1]]
}

/// The eight matrices of the square point group, in canonical order
/// `e, a, a², a³, b, ab, a²b, a³b`.
pub fn square_point_group() -> [IntMatrix; 8] {
    let mut out = [[[0; 2]; 2]; 8];
    let mut rot = [[1, 0], [0, 1]];
    for k in 0..4 {
        out[k] = rot;
        out[k + 4] = mat_mul(&rot, &MIRROR_H);
        rot = mat_mul(&rot, &ROT90);
    }
    out
}

const POINT_LABELS: [&str; 8] = ["", "a", "a^2", "a^3", "b", "ab", "a^2b", "a^3b"];

fn power_label(name: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => name.to_string(),
        _ => format!("{name}^{k}"),
    }
}

fn or_identity(s: String) -> String {
    if s.is_empty() {
        "e".to_string()
    } else {
        s
    }
}

pub fn cyclic(n: usize) -> Result<Arc<FiniteGroup>> {
    if n == 0 {
        return Err(Error::invalid("cyclic group order must be at least 1"));
    }
    let table = (0..n * n).map(|k| ((k / n + k % n) % n) as u32).collect();
    let labels = (0..n).map(|k| or_identity(power_label("a", k))).collect();
    let gens = vec![("a".to_string(), 1 % n)];
    let relators = vec![Word(vec![(0, n as i64)])];
    FiniteGroup::from_table(GroupDescriptor::Cyclic { n }, table, labels, gens, relators)
}

/// Dihedral group of order `2n`: `a` is the rotation, `b` a reflection.
pub fn dihedral(n: usize) -> Result<Arc<FiniteGroup>> {
    if n == 0 {
        return Err(Error::invalid("dihedral parameter n must be at least 1"));
    }
    let order = 2 * n;
    // element a^i b^j has index i + n*j
    let mul = |p: usize, q: usize| -> usize {
        let (i, j) = (p % n, p / n);
        let (k, l) = (q % n, q / n);
        let rot = if j == 0 { (i + k) % n } else { (i + n - k) % n };
        rot + n * ((j + l) % 2)
    };
    let mut table = Vec::with_capacity(order * order);
    for p in 0..order {
        for q in 0..order {
            table.push(mul(p, q) as u32);
        }
    }
    let labels = (0..order)
        .map(|p| {
            let (i, j) = (p % n, p / n);
            or_identity(format!("{}{}", power_label("a", i), if j == 1 { "b" } else { "" }))
        })
        .collect();
    let gens = vec![("a".to_string(), 1 % n), ("b".to_string(), n)];
    let relators = vec![
        Word(vec![(0, n as i64)]),
        Word(vec![(1, 2)]),
        Word(vec![(0, 1), (1, 1), (0, 1), (1, 1)]),
    ];
    FiniteGroup::from_table(GroupDescriptor::Dihedral { n }, table, labels, gens, relators)
}

/// Position of an element of the `p4m` quotient: point-group index and
/// translation `(i, j)` reduced mod `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct P4mCoords {
    pub point: usize,
    pub t: [i64; 2],
}

pub fn p4m_encode(n: usize, c: P4mCoords) -> usize {
    let m = n as i64;
    c.point * n * n + (c.t[0].rem_euclid(m) as usize) * n + c.t[1].rem_euclid(m) as usize
}

pub fn p4m_decode(n: usize, index: usize) -> P4mCoords {
    let point = index / (n * n);
    let rest = index % (n * n);
    P4mCoords { point, t: [(rest / n) as i64, (rest % n) as i64] }
}

/// Relators of the `p4m` presentation in generators `a, b, x, y`:
/// `a⁴, b², (ab)², [x,y], a x a⁻¹ y⁻¹, a y a⁻¹ x, b x b⁻¹ x⁻¹, b y b⁻¹ y`.
pub fn p4m_relators() -> Vec<Word> {
    let (a, b, x, y) = (0, 1, 2, 3);
    vec![
        Word(vec![(a, 4)]),
        Word(vec![(b, 2)]),
        Word(vec![(a, 1), (b, 1), (a, 1), (b, 1)]),
        Word(vec![(x, 1), (y, 1), (x, -1), (y, -1)]),
        Word(vec![(a, 1), (x, 1), (a, -1), (y, -1)]),
        Word(vec![(a, 1), (y, 1), (a, -1), (x, 1)]),
        Word(vec![(b, 1), (x, 1), (b, -1), (x, -1)]),
        Word(vec![(b, 1), (y, 1), (b, -1), (y, 1)]),
    ]
}

/// The semidirect product of the square point group with `(Z/N)²`:
/// `(M₁,t₁)(M₂,t₂) = (M₁M₂, t₁ + M₁t₂ mod N)`, i.e. the `p4m` group
/// modulo the normal lattice `⟨x^N, y^N⟩`.
pub fn p4m_quotient(n: usize) -> Result<Arc<FiniteGroup>> {
    if n == 0 {
        return Err(Error::invalid("p4m quotient modulus N must be at least 1"));
    }
    let pg = square_point_group();
    let point_index = |m: &IntMatrix| pg.iter().position(|p| p == m).expect("point group is closed");
    let order = 8 * n * n;
    let mut table = Vec::with_capacity(order * order);
    for p in 0..order {
        let cp = p4m_decode(n, p);
        for q in 0..order {
            let cq = p4m_decode(n, q);
            let point = point_index(&mat_mul(&pg[cp.point], &pg[cq.point]));
            let mt = mat_vec(&pg[cp.point], cq.t);
            let t = [cp.t[0] + mt[0], cp.t[1] + mt[1]];
            table.push(p4m_encode(n, P4mCoords { point, t }) as u32);
        }
    }
    let labels = (0..order)
        .map(|p| {
            let c = p4m_decode(n, p);
            or_identity(format!(
                "{}{}{}",
                power_label("x", c.t[0] as usize),
                power_label("y", c.t[1] as usize),
                POINT_LABELS[c.point]
            ))
        })
        .collect();
    let at = |point: usize, t: [i64; 2]| p4m_encode(n, P4mCoords { point, t });
    let gens = vec![
        ("a".to_string(), at(1, [0, 0])),
        ("b".to_string(), at(4, [0, 0])),
        ("x".to_string(), at(0, [1, 0])),
        ("y".to_string(), at(0, [0, 1])),
    ];
    let mut relators = p4m_relators();
    relators.push(Word(vec![(2, n as i64)]));
    relators.push(Word(vec![(3, n as i64)]));
    FiniteGroup::from_table(GroupDescriptor::P4mQuotient { n }, table, labels, gens, relators)
}

/// Reflections in the sides of the base tile `e` of the standard pattern
/// for the group: `b, ab` for the hexagon (sides at 0° and 30°),
/// `b, ab, xa²b` for `p4m` (sides `y = 0`, `x = y`, `x = 1/2`). Empty for
/// groups without a reflection pattern.
pub fn domain_walls(group: &FiniteGroup) -> Vec<super::Elem> {
    let words: &[&str] = match group.descriptor() {
        GroupDescriptor::Dihedral { .. } => &["b", "ab"],
        GroupDescriptor::P4mQuotient { .. } => &["b", "ab", "xa2b"],
        _ => &[],
    };
    let mut walls: Vec<super::Elem> =
        words.iter().map(|w| group.parse_element(w).expect("standard generator words")).collect();
    walls.sort();
    walls.dedup();
    walls
}
