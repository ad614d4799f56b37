use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::Subgroup;
use crate::partition::{color_action, cycle_notation, GroupPartition, Verdict};

use super::automorphism::{action_equivalence_check, GroupAutomorphism};
use super::type1_grid;

/// A row of the `(J, l, rˡ)` grid with its verdict or back-reference.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    #[serde(rename = "J")]
    pub j: String,
    pub l: String,
    pub r: String,
    pub result: String,
}

/// Every `(J, l, rˡ)` cell for the class representatives of subgroups of
/// `H` (largest first, `J = H` included). Semiperfect cells are numbered
/// `(k)` in order of first appearance; later cells with the same
/// equivalence key refer back to that number.
pub fn table1_rows(h: &Subgroup) -> Result<Vec<Table1Row>> {
    let group = h.group();
    let mut reps = h.conjugacy_class_reps_of_subgroups(&group.whole())?;
    reps.reverse();
    let mut numbers: HashMap<GroupPartition, usize> = HashMap::new();
    let mut rows = Vec::new();
    for j in &reps {
        let name = if j == h { "H".to_string() } else { j.display_name() };
        for cell in type1_grid(h, j)? {
            let result = match cell.verdict {
                Verdict::Perfect => "perfect".to_string(),
                Verdict::Semiperfect => match numbers.get(&cell.key) {
                    Some(k) => format!("equivalent to ({k})"),
                    None => {
                        let k = numbers.len() + 1;
                        numbers.insert(cell.key.clone(), k);
                        format!("({k}) semiperfect")
                    }
                },
            };
            rows.push(Table1Row {
                j: name.clone(),
                l: group.label(cell.l).to_string(),
                r: group.label(cell.r).to_string(),
                result,
            });
        }
    }
    Ok(rows)
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Columns `J,l,r^l,Resulting Coloring`.
pub fn table1_csv(rows: &[Table1Row]) -> String {
    let mut out = String::from("J,l,r^l,Resulting Coloring\n");
    for r in rows {
        out.push_str(&format!("{},{},{},{}\n", csv_field(&r.j), csv_field(&r.l), csv_field(&r.r), csv_field(&r.result)));
    }
    out
}

/// Color permutations of `h ∈ H` on `P` next to those of `α(h)` on `α(P)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Table3Row {
    pub h: String,
    pub permutation: String,
    pub h_image: String,
    pub permutation_image: String,
}

/// `numbering[i]` is the printed number of block `i` of `P`; blocks of
/// `α(P)` inherit the number of their preimage and are printed primed.
pub fn table3_rows(
    h: &Subgroup,
    p: &GroupPartition,
    alpha: &GroupAutomorphism,
    numbering: &[usize],
) -> Result<Vec<Table3Row>> {
    if numbering.len() != p.num_blocks() {
        return Err(Error::invalid("numbering must cover every block"));
    }
    let group = h.group();
    let h_prime = alpha.apply_subgroup(h);
    let p_prime = alpha.apply_partition(p);
    let eq = action_equivalence_check(h, p, &h_prime, &p_prime, alpha)?;
    if !eq.holds {
        return Err(Error::invalid("the two color actions are not equivalent"));
    }
    let mut numbering_prime = vec![0; numbering.len()];
    for (i, &b) in eq.bijection.iter().enumerate() {
        numbering_prime[b] = numbering[i];
    }
    let act = color_action(h, p)?;
    let act_prime = color_action(&h_prime, &p_prime)?;
    Ok(act
        .permutations
        .iter()
        .map(|(x, perm)| {
            let xp = alpha.apply(*x);
            Table3Row {
                h: group.label(*x).to_string(),
                permutation: cycle_notation(perm, numbering, ""),
                h_image: group.label(xp).to_string(),
                permutation_image: cycle_notation(
                    act_prime.permutation(xp).expect("α(h) lies in H'"),
                    &numbering_prime,
                    "'",
                ),
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builders::dihedral;
    use crate::partition::type2_partition;

    #[test]
    fn table1_has_eighteen_rows() {
        let g = dihedral(6).unwrap();
        let h = g.subgroup_from_words("a2,b").unwrap();
        let rows = table1_rows(&h).unwrap();
        assert_eq!(rows.len(), 18);
        assert_eq!(rows[0], Table1Row { j: "H".into(), l: "e".into(), r: "a".into(), result: "perfect".into() });
        let find = |j: &str, l: &str, r: &str| rows.iter().find(|x| x.j == j && x.l == l && x.r == r).unwrap().result.clone();
        assert_eq!(find("<b>", "e", "a^3"), "perfect");
        assert_eq!(find("<b>", "a^4", "a"), "equivalent to (2)");
    }

    #[test]
    fn table3_matches_printed_numbers() {
        let g = dihedral(6).unwrap();
        let h = g.subgroup_from_words("a2,b").unwrap();
        let j1 = g.subgroup_from_words("a2b").unwrap();
        let p = type2_partition(&h, &j1, &h, g.parse_element("a3").unwrap()).unwrap();
        let alpha = GroupAutomorphism::parse(&g, "a->a5,b->ab").unwrap();
        let rows = table3_rows(&h, &p, &alpha, &[4, 3, 1, 2]).unwrap();
        let flat: Vec<(&str, &str, &str, &str)> = rows
            .iter()
            .map(|r| (r.h.as_str(), r.permutation.as_str(), r.h_image.as_str(), r.permutation_image.as_str()))
            .collect();
        assert_eq!(
            flat,
            [
                ("e", "(1)", "e", "(1')"),
                ("a^2", "(124)", "a^4", "(1'2'4')"),
                ("a^4", "(142)", "a^2", "(1'4'2')"),
                ("b", "(24)", "ab", "(2'4')"),
                ("a^2b", "(12)", "a^5b", "(1'2')"),
                ("a^4b", "(14)", "a^3b", "(1'4')"),
            ]
        );
    }
}
