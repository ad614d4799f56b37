use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, GroupDescriptor, Subgroup};

use super::classify::{classify_type1, classify_type2, color_action, Classification, Verdict};
use super::construct::{check_color_group, check_inside, check_outside, general_partition};
use super::{type1_partition, type2_partition, GroupPartition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecKind {
    /// Blocks `{h(Jˡ ∪ Jˡr)}` with `Jˡ = lJl⁻¹`; `r` is already the
    /// conjugated representative.
    TypeI { j: Subgroup, l: Elem, r: Elem },
    /// Blocks `{hJ₁} ∪ y{hJ₂}`.
    TypeII { j1: Subgroup, j2: Subgroup, y: Elem },
}

/// A coloring recipe together with the partition it realizes.
#[derive(Clone, Debug)]
pub struct ColoringSpec {
    h: Subgroup,
    kind: SpecKind,
    partition: GroupPartition,
}

impl ColoringSpec {
    pub fn type1(h: &Subgroup, j: &Subgroup, l: Elem, r: Elem) -> Result<Self> {
        check_color_group(h)?;
        check_inside(j, h, "J")?;
        if !h.contains(l) {
            return Err(Error::invalid(format!("l = {} is not in H", h.group().label(l))));
        }
        check_outside(r, h, "r")?;
        let partition = type1_partition(h, &j.conjugate(l), r)?;
        Ok(ColoringSpec { h: h.clone(), kind: SpecKind::TypeI { j: j.clone(), l, r }, partition })
    }

    pub fn type2(h: &Subgroup, j1: &Subgroup, j2: &Subgroup, y: Elem) -> Result<Self> {
        let partition = type2_partition(h, j1, j2, y)?;
        Ok(ColoringSpec {
            h: h.clone(),
            kind: SpecKind::TypeII { j1: j1.clone(), j2: j2.clone(), y },
            partition,
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.h.group()
    }

    pub fn h(&self) -> &Subgroup {
        &self.h
    }

    pub fn kind(&self) -> &SpecKind {
        &self.kind
    }

    pub fn partition(&self) -> &GroupPartition {
        &self.partition
    }

    pub fn is_type1(&self) -> bool {
        matches!(self.kind, SpecKind::TypeI { .. })
    }

    /// Verdict from the closed-form criteria (no oracle).
    pub fn verdict(&self) -> Result<Verdict> {
        match &self.kind {
            SpecKind::TypeI { j, l, r } => classify_type1(&j.conjugate(*l), *r, &self.h),
            SpecKind::TypeII { j1, j2, .. } => classify_type2(j1, j2),
        }
    }

    pub fn classification(&self) -> Result<Classification> {
        Ok(color_action(&self.h, &self.partition)?.classification)
    }

    pub fn to_json(&self) -> ColoringSpecJson {
        let g = self.group();
        let label = |e: Elem| g.label(e).to_string();
        let mut json = ColoringSpecJson {
            group: Some(g.descriptor().clone()),
            h: self.h.labels(),
            kind: String::new(),
            j: None,
            l: None,
            r: None,
            j1: None,
            j2: None,
            y: None,
        };
        match &self.kind {
            SpecKind::TypeI { j, l, r } => {
                json.kind = "type1".into();
                json.j = Some(j.labels());
                json.l = Some(label(*l));
                json.r = Some(label(*r));
            }
            SpecKind::TypeII { j1, j2, y } => {
                json.kind = "type2".into();
                json.j1 = Some(j1.labels());
                json.j2 = Some(j2.labels());
                json.y = Some(label(*y));
            }
        }
        json
    }

    pub fn from_json(group: &Arc<FiniteGroup>, json: &ColoringSpecJson) -> Result<Self> {
        let h = group.subgroup_from_labels(&json.h)?;
        let sub = |field: &Option<Vec<String>>, name: &str| -> Result<Subgroup> {
            let labels = field.as_ref().ok_or_else(|| Error::invalid(format!("spec is missing \"{name}\"")))?;
            group.subgroup_from_labels(labels)
        };
        let elem = |field: &Option<String>, name: &str| -> Result<Elem> {
            let label = field.as_ref().ok_or_else(|| Error::invalid(format!("spec is missing \"{name}\"")))?;
            group.parse_element(label)
        };
        match json.kind.as_str() {
            "type1" => {
                let l = match &json.l {
                    Some(_) => elem(&json.l, "l")?,
                    None => Elem::IDENTITY,
                };
                Self::type1(&h, &sub(&json.j, "J")?, l, elem(&json.r, "r")?)
            }
            "type2" => Self::type2(&h, &sub(&json.j1, "J1")?, &sub(&json.j2, "J2")?, elem(&json.y, "y")?),
            other => Err(Error::invalid(format!("unknown spec kind \"{other}\""))),
        }
    }
}

/// File form of a [`ColoringSpec`]; all group data as element labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringSpecJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupDescriptor>,
    #[serde(rename = "H")]
    pub h: Vec<String>,
    pub kind: String,
    #[serde(rename = "J", default, skip_serializing_if = "Option::is_none")]
    pub j: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<String>,
    #[serde(rename = "J1", default, skip_serializing_if = "Option::is_none")]
    pub j1: Option<Vec<String>>,
    #[serde(rename = "J2", default, skip_serializing_if = "Option::is_none")]
    pub j2: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<String>,
}

/// A Type I family `{hJᵍY}` rewritten as `prefix · {h(J' ∪ J'y')}`.
#[derive(Clone, Debug)]
pub struct NormalizedType1 {
    pub prefix: Elem,
    pub j: Subgroup,
    pub y: Elem,
    /// `{h(J' ∪ J'y')}` itself, before the left factor.
    pub partition: GroupPartition,
}

/// Rewrites `{hJᵍY : h ∈ H}` (with `Jᵍ = gJg⁻¹`) into the canonical
/// two-coset form. With `g⁻¹Y = {x, y}`, `x ∈ H`:
///
/// 1. `{hJᵍY} = g{hJ(g⁻¹Y)}`
/// 2. `{hJ{x,y}} = x{hJ'{e, x⁻¹y}}` where `J' = x⁻¹Jx`
/// 3. `x⁻¹y` may be replaced by the smallest element `y'` of `J'x⁻¹y`
/// 4. `{hJ'{e,y'}} = {h(J' ∪ J'y')}`
///
/// The realized partitions of the input and of `prefix · result` are
/// compared before returning.
pub fn normalize_spec(h: &Subgroup, j: &Subgroup, g: Elem, ys: [Elem; 2]) -> Result<NormalizedType1> {
    check_color_group(h)?;
    check_inside(j, h, "J")?;
    let group = h.group();
    let ginv = group.inv(g);
    let moved = [group.mul(ginv, ys[0]), group.mul(ginv, ys[1])];
    let (x, y) = match (h.contains(moved[0]), h.contains(moved[1])) {
        (true, false) => (moved[0], moved[1]),
        (false, true) => (moved[1], moved[0]),
        _ => {
            return Err(Error::invalid(
                "Y is not a complete set of right coset representatives of H",
            ))
        }
    };
    let xinv = group.inv(x);
    let j_prime = j.conjugate(xinv);
    let y_prime = j_prime.right_coset_min(group.mul(xinv, y));
    let partition = type1_partition(h, &j_prime, y_prime)?;
    let prefix = group.mul(g, x);

    let direct = general_partition(h, &[(j.conjugate(g), ys.to_vec())])?;
    if direct != partition.translate(prefix) {
        return Err(Error::invalid("normalized form does not reproduce the input partition"));
    }
    Ok(NormalizedType1 { prefix, j: j_prime, y: y_prime, partition })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builders::dihedral;

    #[test]
    fn normalize_shifts_by_x() {
        let g = dihedral(6).unwrap();
        let h = g.subgroup_from_words("a2,b").unwrap();
        let j = g.subgroup_from_words("b").unwrap();
        let el = |s: &str| g.parse_element(s).unwrap();
        let n = normalize_spec(&h, &j, Elem::IDENTITY, [el("a2"), el("a3")]).unwrap();
        assert_eq!(n.prefix, el("a2"));
        // a⁻²ba² = a²b
        assert_eq!(n.j, g.subgroup_from_words("a2b").unwrap());
        assert_eq!(n.y, j.conjugate(g.inv(el("a2"))).right_coset_min(el("a")));
    }

    #[test]
    fn normalize_identity_rewrite() {
        let g = dihedral(6).unwrap();
        let h = g.subgroup_from_words("a2,b").unwrap();
        let j = g.subgroup_from_words("b").unwrap();
        let a3 = g.parse_element("a3").unwrap();
        let n = normalize_spec(&h, &j, Elem::IDENTITY, [Elem::IDENTITY, a3]).unwrap();
        assert_eq!(n.prefix, Elem::IDENTITY);
        assert_eq!(n.j, j);
        assert_eq!(n.partition, type1_partition(&h, &j, a3).unwrap());
    }

    #[test]
    fn any_coset_member_gives_the_same_partition() {
        let g = dihedral(6).unwrap();
        let h = g.subgroup_from_words("a2,b").unwrap();
        let j = g.subgroup_from_words("b").unwrap();
        let a3 = g.parse_element("a3").unwrap();
        let base = type1_partition(&h, &j, a3).unwrap();
        for &m in j.members() {
            assert_eq!(type1_partition(&h, &j, g.mul(m, a3)).unwrap(), base);
        }
    }

    #[test]
    fn normalize_with_outer_factor() {
        let g = dihedral(6).unwrap();
        let h = g.subgroup_from_words("a2,b").unwrap();
        let j = g.subgroup_from_words("b").unwrap();
        let el = |s: &str| g.parse_element(s).unwrap();
        for gg in g.elements() {
            let n = normalize_spec(&h, &j, gg, [el("a4b"), el("a")]).unwrap();
            assert!(n.j.is_subgroup_of(&h));
        }
        assert!(normalize_spec(&h, &j, Elem::IDENTITY, [el("a"), el("a3")]).is_err());
    }

    #[test]
    fn spec_json_round_trip() {
        let g = dihedral(6).unwrap();
        let h = g.subgroup_from_words("a2,b").unwrap();
        let j = g.subgroup_from_words("b").unwrap();
        let el = |s: &str| g.parse_element(s).unwrap();
        let s = ColoringSpec::type1(&h, &j, el("a2"), el("a5")).unwrap();
        let json = s.to_json();
        assert_eq!(json.kind, "type1");
        assert_eq!(json.l.as_deref(), Some("a^2"));
        let back = ColoringSpec::from_json(&g, &json).unwrap();
        assert_eq!(back.partition(), s.partition());
        let text = serde_json::to_string(&json).unwrap();
        assert!(text.contains("\"H\":[\"e\",\"a^2\",\"a^4\",\"b\",\"a^2b\",\"a^4b\"]"));
    }
}
