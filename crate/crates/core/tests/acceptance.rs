//! One line per acceptance criterion. Criterion 12 is reported but never
//! fails the run.

use std::collections::{BTreeSet, HashMap};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use semicolor::enumerate::{
    conjugate_spec, enumerate_all_semiperfect, enumerate_type1, enumerate_type2, table1_rows, table3_rows,
    type1_grid, Constraints, GroupAutomorphism, TypeSelection,
};
use semicolor::geometry::{corollary6_check, table2_rows, Corollary6, Palette, TileMap, FOUR_COLOR_NUMBERS};
use semicolor::lowindex::{low_index_subgroup_count, Presentation};
use semicolor::partition::{classify_type1, classify_type2, type1_analysis, type1_partition, type2_partition};
use semicolor::{dihedral, p4m_quotient, ColoringSpec, FiniteGroup, GroupPartition, Subgroup, Verdict};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e2s<T>(r: semicolor::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn oracle(p: &GroupPartition) -> Verdict {
    if p.stabilizer().is_whole() {
        Verdict::Perfect
    } else {
        Verdict::Semiperfect
    }
}

fn hexagon() -> (Arc<FiniteGroup>, Subgroup) {
    let g = dihedral(6).unwrap();
    let h = g.subgroup_from_words("a2,b").unwrap();
    (g, h)
}

const TABLE1: [(&str, &str, &str, &str); 18] = [
    ("H", "e", "a", "perfect"),
    ("<a^2>", "e", "a", "perfect"),
    ("<a^2>", "e", "ab", "perfect"),
    ("<b>", "e", "a", "(1) semiperfect"),
    ("<b>", "e", "a^3", "perfect"),
    ("<b>", "e", "a^5", "(2) semiperfect"),
    ("<b>", "a^2", "a", "(3) semiperfect"),
    ("<b>", "a^2", "a^3", "perfect"),
    ("<b>", "a^2", "a^5", "equivalent to (1)"),
    ("<b>", "a^4", "a", "equivalent to (2)"),
    ("<b>", "a^4", "a^3", "perfect"),
    ("<b>", "a^4", "a^5", "equivalent to (3)"),
    ("{e}", "e", "ab", "perfect"),
    ("{e}", "e", "a", "(4) semiperfect"),
    ("{e}", "e", "a^3b", "perfect"),
    ("{e}", "e", "a^3", "perfect"),
    ("{e}", "e", "a^5b", "perfect"),
    ("{e}", "e", "a^5", "equivalent to (4)"),
];

fn c1() -> Outcome {
    let (_, h) = hexagon();
    let rows = e2s(table1_rows(&h))?;
    ensure(rows.len() == 18, format!("{} rows", rows.len()))?;
    let got: Vec<(String, String, String, String)> =
        rows.iter().map(|r| (r.j.clone(), r.l.clone(), r.r.clone(), r.result.clone())).collect();
    let want: Vec<(String, String, String, String)> =
        TABLE1.iter().map(|r| (r.0.into(), r.1.into(), r.2.into(), r.3.into())).collect();
    // rows 0..12 in printed order; the {e} block as a set (its printed
    // order is angular, ours is canonical)
    ensure(got[..12] == want[..12], "rows for H, <a^2>, <b> differ")?;
    let a: BTreeSet<_> = got[12..].iter().collect();
    let b: BTreeSet<_> = want[12..].iter().collect();
    ensure(a == b, "rows for {e} differ")?;
    Ok("18 rows, back-references (1)-(4) match".into())
}

fn c2() -> Outcome {
    let (_, h) = hexagon();
    let n = e2s(enumerate_type2(&h, &Constraints::default()))?.len();
    ensure(n == 15, format!("{n} entries"))?;
    Ok("15 Type II entries".into())
}

fn c3() -> Outcome {
    let (g, h) = hexagon();
    let rot = g.subgroup_from_words("a").unwrap();
    let c = Constraints { h_filter: Some(vec![h, rot]), ..Default::default() };
    let census = e2s(enumerate_all_semiperfect(&g, &c))?;
    let parts: Vec<(usize, usize)> = census.per_h.iter().map(|s| (s.type2, s.type1)).collect();
    ensure(census.len() == 25 && parts == [(15, 4), (6, 0)], format!("{} entries, {parts:?}", census.len()))?;
    Ok("25 = 15 + 4 + 6 + 0".into())
}

fn c4() -> Outcome {
    let p = e2s(Presentation::builtin("H_p4m_sub"))?;
    let i2 = e2s(low_index_subgroup_count(&p, 2))?;
    let i3 = e2s(low_index_subgroup_count(&p, 3))?;
    ensure(i2 == 7 && i3 == 0, format!("presentation: index 2 -> {i2}, index 3 -> {i3}"))?;
    let g = e2s(p4m_quotient(4))?;
    let h = e2s(g.subgroup_from_words("a,ab,xy,Xy"))?;
    let q2 = h.all_subgroups().map_err(|e| e.to_string())?.iter().filter(|s| s.index_in(&h).unwrap() == 2).count();
    ensure(q2 == 7, format!("quotient N=4: {q2} subgroups of index 2 in H"))?;
    let c = Constraints { max_colors: Some(4), ..Default::default() };
    let n = e2s(enumerate_type2(&h, &c))?.len();
    ensure(n == 28, format!("{n} Type II entries"))?;
    Ok(format!("index-2 count {i2}, index-3 count {i3}, Type II (<=4 colors) {n}"))
}

fn type1_oracle_sweep(h: &Subgroup) -> Result<usize, String> {
    let g = h.group();
    let mut checked = 0;
    for j in e2s(h.all_subgroups())? {
        for r in g.elements().filter(|r| !h.contains(*r)) {
            let v = e2s(classify_type1(&j, r, h))?;
            let o = oracle(&e2s(type1_partition(h, &j, r))?);
            ensure(v == o, format!("J={} r={}: {v} vs {o}", j.display_name(), g.label(r)))?;
            checked += 1;
        }
    }
    Ok(checked)
}

fn settings() -> Vec<Subgroup> {
    let (_, h) = hexagon();
    let q = p4m_quotient(2).unwrap();
    vec![h, q.subgroup_from_words("b,a2b,x,y").unwrap()]
}

fn c5() -> Outcome {
    let mut total = 0;
    for h in settings() {
        total += type1_oracle_sweep(&h)?;
    }
    Ok(format!("{total} (J, r) pairs agree with the stabilizer oracle"))
}

fn c6() -> Outcome {
    let mut total = 0;
    for h in settings() {
        let g = h.group().clone();
        let subs = e2s(h.all_subgroups())?;
        for j1 in &subs {
            for j2 in &subs {
                let v = e2s(classify_type2(j1, j2))?;
                for y in g.elements().filter(|y| !h.contains(*y)) {
                    let o = oracle(&e2s(type2_partition(&h, j1, j2, y))?);
                    ensure(v == o, format!("J1={} J2={}: {v} vs {o}", j1.display_name(), j2.display_name()))?;
                    total += 1;
                }
            }
        }
    }
    Ok(format!("{total} (J1, J2, y) triples agree with the oracle"))
}

fn c7() -> Outcome {
    let (g, _) = hexagon();
    let census = e2s(enumerate_all_semiperfect(&g, &Constraints::default()))?;
    for e in &census.entries {
        let class = e.spec.partition().equivalence_class();
        ensure(class.len() == 2, format!("orbit of size {}", class.len()))?;
        ensure(class[0].stabilizer() == class[1].stabilizer(), "stabilizers differ")?;
    }
    Ok(format!("{} entries, every orbit has size 2 with one stabilizer", census.len()))
}

fn pair_sizes(h: &Subgroup, j: &Subgroup) -> Result<(usize, Vec<usize>), String> {
    let grid = e2s(type1_grid(h, j))?;
    let perfect = grid.iter().filter(|c| c.verdict == Verdict::Perfect).count();
    let mut classes: HashMap<GroupPartition, usize> = HashMap::new();
    for c in grid.iter().filter(|c| c.verdict == Verdict::Semiperfect) {
        *classes.entry(c.key.clone()).or_default() += 1;
    }
    let mut sizes: Vec<usize> = classes.into_values().collect();
    sizes.sort();
    Ok((perfect, sizes))
}

fn c8() -> Outcome {
    let (g, h) = hexagon();
    let b = e2s(g.subgroup_from_words("b"))?;
    let grid = e2s(type1_grid(&h, &b))?;
    let (perfect, sizes) = pair_sizes(&h, &b)?;
    ensure(grid.len() == 9 && perfect == 3 && sizes == [2, 2, 2], format!("{} cells, {perfect} perfect, classes {sizes:?}", grid.len()))?;

    let q = e2s(p4m_quotient(2))?;
    for h in e2s(q.subgroups_of_index(2))? {
        for j in e2s(h.conjugacy_class_reps_of_subgroups(&q.whole()))? {
            if e2s(q.whole().normalizer(&j))? != e2s(h.normalizer(&j))? {
                continue;
            }
            let (_, sizes) = pair_sizes(&h, &j)?;
            if sizes.len() >= 2 {
                ensure(sizes.iter().all(|&s| s == 1), format!("H={} J={}: {sizes:?}", h.display_name(), j.display_name()))?;
                return Ok(format!(
                    "<b>: 3 perfect + 3 pairs; p4m N=2 H={} J={}: {} semiperfect cells, no equivalent pair",
                    h.display_name(),
                    j.display_name(),
                    sizes.len()
                ));
            }
        }
    }
    Err("no J with N_G(J) = N_H(J) and two semiperfect cells found".into())
}

fn c9() -> Outcome {
    let (g, h) = hexagon();
    let j1 = e2s(g.subgroup_from_words("a2b"))?;
    let spec = e2s(ColoringSpec::type2(&h, &j1, &h, e2s(g.parse_element("a3"))?))?;
    let alpha = e2s(GroupAutomorphism::parse(&g, "a->a5,b->ab"))?;
    let moved = e2s(conjugate_spec(&spec, &alpha))?;
    let blocks: BTreeSet<BTreeSet<String>> =
        moved.partition().label_blocks().into_iter().map(|b| b.into_iter().collect()).collect();
    let want: BTreeSet<BTreeSet<String>> = [
        vec!["e", "a^5b"],
        vec!["ab", "a^2"],
        vec!["a^3b", "a^4"],
        vec!["a", "a^2b", "a^3", "a^4b", "a^5", "b"],
    ]
    .iter()
    .map(|b| b.iter().map(|s| s.to_string()).collect())
    .collect();
    ensure(blocks == want, "P' differs")?;

    let map = e2s(TileMap::for_group(&g))?;
    let t2 = e2s(table2_rows(&map, &spec.partition().assignment(), &alpha, &e2s(Palette::named("paper-fig1b"))?))?;
    let t2: Vec<[&str; 4]> =
        t2.iter().map(|r| [r.domain.as_str(), r.original.as_str(), r.image.as_str(), r.new.as_str()]).collect();
    let want2 = [
        ["e", "yellow", "e", "yellow"],
        ["ab", "red", "b", "green"],
        ["a", "red", "a^5", "red"],
        ["a^2b", "yellow", "a^5b", "red"],
        ["a^2", "blue", "a^4", "green"],
        ["a^3b", "red", "a^4b", "blue"],
        ["a^3", "red", "a^3", "red"],
        ["a^4b", "blue", "a^3b", "red"],
        ["a^4", "green", "a^2", "blue"],
        ["a^5b", "red", "a^2b", "yellow"],
        ["a^5", "red", "a", "red"],
        ["b", "green", "ab", "red"],
    ];
    ensure(t2 == want2, "transfer table differs")?;

    let t3 = e2s(table3_rows(&h, spec.partition(), &alpha, &FOUR_COLOR_NUMBERS))?;
    let t3: Vec<[&str; 4]> =
        t3.iter().map(|r| [r.h.as_str(), r.permutation.as_str(), r.h_image.as_str(), r.permutation_image.as_str()]).collect();
    let want3 = [
        ["e", "(1)", "e", "(1')"],
        ["a^2", "(124)", "a^4", "(1'2'4')"],
        ["a^4", "(142)", "a^2", "(1'4'2')"],
        ["b", "(24)", "ab", "(2'4')"],
        ["a^2b", "(12)", "a^5b", "(1'2')"],
        ["a^4b", "(14)", "a^3b", "(1'4')"],
    ];
    ensure(t3 == want3, "permutation table differs")?;
    Ok("P' blocks, 12 transfer rows, 6 permutation rows".into())
}

fn c10() -> Outcome {
    let q = e2s(p4m_quotient(2))?;
    let j = e2s(q.subgroup_from_words("a3b,xy,Xy"))?;
    let r = e2s(q.parse_element("a2b"))?;
    ensure(e2s(corollary6_check(&j, r))? == Corollary6::Semiperfect, "diagram test inconclusive")?;
    let h = e2s(q.subgroups_of_index(2))?.into_iter().find(|h| j.is_subgroup_of(h) && !h.contains(r));
    let h = h.ok_or("no index-2 H contains J but not r")?;
    ensure(e2s(classify_type1(&j, r, &h))? == Verdict::Semiperfect, "classify_type1 disagrees")?;
    let mut checked = 0;
    let mut fired = 0;
    for h in e2s(q.subgroups_of_index(2))? {
        for j in e2s(h.all_subgroups())? {
            for r in q.elements().filter(|r| !h.contains(*r)) {
                if e2s(corollary6_check(&j, r))? == Corollary6::Semiperfect {
                    fired += 1;
                    ensure(e2s(classify_type1(&j, r, &h))? == Verdict::Semiperfect, format!("unsound at J={}", j.display_name()))?;
                }
                checked += 1;
            }
        }
    }
    Ok(format!("example semiperfect; sound on {checked} triples ({fired} decided)"))
}

fn c11() -> Outcome {
    let q = e2s(p4m_quotient(2))?;
    let h = e2s(q.subgroup_from_words("b,a2b,x,y"))?;
    let j = e2s(q.subgroup_from_words("xa2b,xy,xY"))?;
    let a = e2s(q.parse_element("a"))?;
    let analysis = e2s(type1_analysis(&j, a, &h))?;
    ensure(analysis.verdict() == Verdict::Semiperfect && !analysis.square_in_j, format!("{analysis:?}"))?;
    Ok(format!("semiperfect: {}", analysis.reason()))
}

fn c12() -> Outcome {
    let q = e2s(p4m_quotient(4))?;
    let hs = [e2s(q.subgroup_from_words("a,ab,xy,Xy"))?, e2s(q.subgroup_from_words("xa,ab,xy,Xy"))?];
    let c = Constraints { max_colors: Some(4), orbit_count: Some(1), types: TypeSelection::TypeI, ..Default::default() };
    let per: Vec<usize> = hs.iter().map(|h| enumerate_type1(h, &c).map(|v| v.len())).collect::<semicolor::Result<_>>().map_err(|e| e.to_string())?;
    let combined: usize = per.iter().sum();
    let note = format!(
        "Type I, <=4 colors, one orbit, N=4: H={} -> {}, H'={} -> {}, combined {combined}; expected 44",
        hs[0].display_name(),
        per[0],
        hs[1].display_name(),
        per[1]
    );
    if per[0] == 44 || combined == 44 {
        Ok(note)
    } else {
        Err(note)
    }
}

fn main() -> ExitCode {
    let criteria: [(usize, &str, fn() -> Outcome, Option<Duration>, bool); 12] = [
        (1, "(J, l, r^l) grid", c1, Some(Duration::from_secs(1)), true),
        (2, "hexagon Type II count", c2, Some(Duration::from_secs(1)), true),
        (3, "hexagon full census", c3, Some(Duration::from_secs(1)), true),
        (4, "p4m Type II count", c4, Some(Duration::from_secs(60)), true),
        (5, "Type I verdict vs oracle", c5, Some(Duration::from_secs(120)), true),
        (6, "Type II verdict vs oracle", c6, None, true),
        (7, "orbit size and stabilizers", c7, None, true),
        (8, "Type I pairing", c8, None, true),
        (9, "automorphism transfer", c9, None, true),
        (10, "diagram test", c10, None, true),
        (11, "p4m r^2 example", c11, None, true),
        (12, "p4m Type I census (stretch)", c12, Some(Duration::from_secs(600)), false),
    ];
    let mut hard_failures = 0;
    for (k, name, run, limit, hard) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let slow = limit.is_some_and(|l| elapsed > l);
        let (status, detail) = match (&outcome, slow) {
            (Ok(msg), false) => ("PASS", msg.clone()),
            (Ok(msg), true) => ("FAIL", format!("{msg}; too slow")),
            (Err(msg), _) if !hard => ("REPORT", msg.clone()),
            (Err(msg), _) => ("FAIL", msg.clone()),
        };
        if status == "FAIL" && hard {
            hard_failures += 1;
        }
        println!("{status:<6} criterion {k:>2} {name}: {detail} [{:.2}s]", elapsed.as_secs_f64());
    }
    if hard_failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{hard_failures} criteria failed");
        ExitCode::FAILURE
    }
}
