use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::Serialize;
use serde_json::json;

use semicolor::enumerate::{
    action_equivalence_check, conjugate_spec, enumerate_all_semiperfect, find_conjugating_automorphism,
    table1_csv, table1_rows, table3_rows, Constraints, GroupAutomorphism, TypeSelection,
};
use semicolor::geometry::{
    corollary6_check, diagram, render_svg, table2_rows, Palette, Pattern, RenderOptions, TileMap,
};
use semicolor::lowindex::{low_index_search, Presentation, PresentationJson};
use semicolor::partition::ColoringSpecJson;
use semicolor::verify::verify_group;
use semicolor::{ColoringSpec, FiniteGroup, GroupDescriptor, Subgroup};

use crate::error::{CliError, CliResult};
use crate::{CensusFormat, Command, PatternArg, ReportFormat, TypeArg};

pub fn run(command: Command) -> CliResult<()> {
    match command {
        Command::Subgroups { group, of, index, out } => subgroups(&group, of.as_deref(), index, out.as_deref()),
        Command::Enumerate { group, h, kind, max_colors, orbits, reduce_by, format, out } => {
            enumerate(&group, &h, kind, max_colors, orbits, &reduce_by, format, out.as_deref())
        }
        Command::Table1 { out } => {
            let g = semicolor::dihedral(6)?;
            let h = g.subgroup_from_words("a2,b")?;
            emit(out.as_deref(), &table1_csv(&table1_rows(&h)?))
        }
        Command::Verify { group, exhaustive, format } => verify(&group, exhaustive, format),
        Command::Render { spec, group, pattern, palette, repeat, scale, out } => {
            render(&spec, group.as_deref(), pattern, &palette, &repeat, scale, out.as_deref())
        }
        Command::Conjugate { spec, group, alpha, to, numbering, palette, out } => conjugate(
            &spec,
            group.as_deref(),
            alpha.as_deref(),
            to.as_deref(),
            &numbering,
            &palette,
            out.as_deref(),
        ),
        Command::Diagram { group, j, r } => diagram_cmd(&group, &j, r.as_deref()),
        Command::Lowindex { presentation, index } => lowindex(&presentation, index),
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json_text<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn build_group(text: &str) -> CliResult<Arc<FiniteGroup>> {
    Ok(GroupDescriptor::parse(text)?.build()?)
}

/// `a2,b`, `H=a2,b`, or `e` / `{e}` for the trivial subgroup.
fn parse_subgroup(group: &Arc<FiniteGroup>, text: &str) -> CliResult<Subgroup> {
    let words = text.split_once('=').map_or(text, |(_, w)| w).trim();
    if matches!(words, "" | "e" | "{e}") {
        return Ok(group.trivial_subgroup());
    }
    Ok(group.subgroup_from_words(words)?)
}

fn subgroup_json(s: &Subgroup, ambient: &Subgroup) -> CliResult<serde_json::Value> {
    let gens: Vec<&str> = s.generators().into_iter().map(|g| s.group().label(g)).collect();
    Ok(json!({
        "name": s.display_name(),
        "order": s.order(),
        "index": s.index_in(ambient)?,
        "generators": gens,
        "elements": s.labels(),
    }))
}

fn subgroups(group: &str, of: Option<&str>, index: Option<usize>, out: Option<&Path>) -> CliResult<()> {
    let g = build_group(group)?;
    let ambient = match of {
        Some(text) => parse_subgroup(&g, text)?,
        None => g.whole(),
    };
    let mut list = Vec::new();
    for s in ambient.all_subgroups()? {
        if index.is_none_or(|k| s.index_in(&ambient).ok() == Some(k)) {
            list.push(subgroup_json(&s, &ambient)?);
        }
    }
    let doc = json!({
        "group": g.descriptor(),
        "of": ambient.display_name(),
        "count": list.len(),
        "subgroups": list,
    });
    emit(out, &to_json_text(&doc))
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    group: &str,
    hs: &[String],
    kind: TypeArg,
    max_colors: Option<usize>,
    orbits: Option<usize>,
    reduce_by: &[String],
    format: CensusFormat,
    out: Option<&Path>,
) -> CliResult<()> {
    let g = build_group(group)?;
    let h_filter = if hs.is_empty() {
        None
    } else {
        Some(hs.iter().map(|t| parse_subgroup(&g, t)).collect::<CliResult<Vec<_>>>()?)
    };
    let constraints = Constraints {
        max_colors,
        orbit_count: orbits,
        h_filter,
        reduce_by_normalizer: reduce_by
            .iter()
            .map(|t| GroupAutomorphism::parse(&g, t))
            .collect::<semicolor::Result<Vec<_>>>()?,
        types: match kind {
            TypeArg::One => TypeSelection::TypeI,
            TypeArg::Two => TypeSelection::TypeII,
            TypeArg::All => TypeSelection::All,
        },
    };
    let census = enumerate_all_semiperfect(&g, &constraints)?;
    let body = match format {
        CensusFormat::Json => to_json_text(&census.to_json()),
        CensusFormat::Csv => census.to_csv(),
    };
    let mut summary = format!("{} semiperfect\n", census.len());
    for s in &census.per_h {
        summary.push_str(&format!("  H={}: type I {}, type II {}", s.h, s.type1, s.type2));
        if let Some(via) = &s.transported_by {
            summary.push_str(&format!(" (transported by {via})"));
        }
        summary.push('\n');
    }
    if let Some(note) = &census.scope_note {
        summary.push_str(&format!("  note: {note}\n"));
    }
    match out {
        Some(_) => {
            emit(out, &body)?;
            print!("{summary}");
        }
        None => {
            print!("{body}");
            eprint!("{summary}");
        }
    }
    Ok(())
}

fn verify(group: &str, exhaustive: bool, format: ReportFormat) -> CliResult<()> {
    let g = build_group(group)?;
    let report = verify_group(&g, exhaustive)?;
    match format {
        ReportFormat::Text => print!("{}", report.to_text()),
        ReportFormat::Json => print!("{}", to_json_text(&report)),
    }
    if report.passed() {
        Ok(())
    } else {
        let failed: Vec<&str> = report.suites.iter().filter(|s| !s.passed()).map(|s| s.name.as_str()).collect();
        Err(CliError::Verification(format!("failing suites: {}", failed.join(", "))))
    }
}

fn load_spec(path: &Path, group: Option<&str>) -> CliResult<ColoringSpec> {
    let json: ColoringSpecJson = serde_json::from_str(&read(path)?)
        .map_err(|e| CliError::Usage(format!("{}: bad spec JSON: {e}", path.display())))?;
    let descriptor = match (group, &json.group) {
        (Some(text), _) => GroupDescriptor::parse(text)?,
        (None, Some(d)) => d.clone(),
        (None, None) => return Err(CliError::Usage("spec names no group; pass --group".into())),
    };
    let g = descriptor.build()?;
    Ok(ColoringSpec::from_json(&g, &json)?)
}

fn load_palette(text: &str) -> CliResult<Palette> {
    let path = PathBuf::from(text);
    if path.is_file() {
        Ok(Palette::from_json(&read(&path)?)?)
    } else {
        Ok(Palette::named(text)?)
    }
}

fn parse_repeat(text: &str) -> CliResult<[usize; 2]> {
    let bad = || CliError::Usage(format!("bad --repeat \"{text}\", expected MxN"));
    let (a, b) = text.split_once(['x', 'X']).ok_or_else(bad)?;
    Ok([a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?])
}

fn render(
    spec: &Path,
    group: Option<&str>,
    pattern: Option<PatternArg>,
    palette: &str,
    repeat: &str,
    scale: Option<f64>,
    out: Option<&Path>,
) -> CliResult<()> {
    let spec = load_spec(spec, group)?;
    let map = TileMap::for_group(spec.group())?;
    if let Some(p) = pattern {
        let matches = matches!((p, map.pattern()), (PatternArg::Hexagon, Pattern::Hexagon) | (PatternArg::P4m, Pattern::P4m { .. }));
        if !matches {
            return Err(semicolor::Error::UnsupportedPattern(format!(
                "pattern {p:?} does not fit group {}",
                spec.group().descriptor()
            ))
            .into());
        }
    }
    let mut options = RenderOptions { repeat: parse_repeat(repeat)?, ..RenderOptions::default() };
    if let Some(s) = scale {
        options.scale = s;
    }
    let svg = render_svg(&map, &spec.partition().assignment(), &load_palette(palette)?, &options)?;
    emit(out, &svg)
}

fn conjugate(
    spec_path: &Path,
    group: Option<&str>,
    alpha: Option<&str>,
    to: Option<&str>,
    numbering: &[usize],
    palette: &str,
    out: Option<&Path>,
) -> CliResult<()> {
    let spec = load_spec(spec_path, group)?;
    let g = spec.group().clone();
    let alpha = match (alpha, to) {
        (Some(text), _) => GroupAutomorphism::parse(&g, text)?,
        (None, Some(target)) => {
            let h_prime = parse_subgroup(&g, target)?;
            find_conjugating_automorphism(&g, spec.h(), &h_prime)?.ok_or_else(|| {
                CliError::Usage(format!("no automorphism maps {} onto {}", spec.h().display_name(), h_prime.display_name()))
            })?
        }
        (None, None) => return Err(CliError::Usage("pass --alpha or --to".into())),
    };
    let moved = conjugate_spec(&spec, &alpha)?;
    let eq = action_equivalence_check(spec.h(), spec.partition(), moved.h(), moved.partition(), &alpha)?;
    let numbering: Vec<usize> =
        if numbering.is_empty() { (1..=spec.partition().num_blocks()).collect() } else { numbering.to_vec() };
    let table3 = table3_rows(spec.h(), spec.partition(), &alpha, &numbering)?;
    let table2 = match TileMap::for_group(&g) {
        Ok(map) => Some(table2_rows(&map, &spec.partition().assignment(), &alpha, &load_palette(palette)?)?),
        Err(_) => None,
    };
    let doc = json!({
        "alpha": alpha.describe(),
        "H": spec.h().display_name(),
        "HPrime": moved.h().display_name(),
        "spec": moved.to_json(),
        "blocks": moved.partition().label_blocks(),
        "verdict": moved.classification()?.verdict,
        "actionEquivalent": eq.holds,
        "table2": table2,
        "table3": table3,
    });
    emit(out, &to_json_text(&doc))
}

fn diagram_cmd(group: &str, j: &str, r: Option<&str>) -> CliResult<()> {
    let g = build_group(group)?;
    let j = parse_subgroup(&g, j)?;
    let mut doc = json!({ "J": j.display_name(), "diagram": diagram(&j)?.to_json() });
    if let Some(r) = r {
        let r = g.parse_element(r)?;
        doc["r"] = json!(g.label(r));
        doc["corollary6"] = json!(corollary6_check(&j, r)?);
    }
    print!("{}", to_json_text(&doc));
    Ok(())
}

fn lowindex(presentation: &str, index: usize) -> CliResult<()> {
    let path = PathBuf::from(presentation);
    let p = if path.is_file() {
        let json: PresentationJson = serde_json::from_str(&read(&path)?)
            .map_err(|e| CliError::Usage(format!("{}: bad presentation JSON: {e}", path.display())))?;
        Presentation::from_json(&json)?
    } else {
        Presentation::builtin(presentation)?
    };
    let report = low_index_search(&p, index)?;
    print!("{}", to_json_text(&json!({ "presentation": presentation, "report": report })));
    Ok(())
}
