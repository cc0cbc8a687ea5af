use anyhow::{Context, Result};
use qutrit_core::density::{reduced_summary, ReducedSummary};
use qutrit_core::errata::errata;
use qutrit_core::generators::{structure_constants, GeneratorSet};
use qutrit_core::reference::printed_entropy;
use qutrit_core::sampler::{estimate, estimate_sharded, plan_from_operator};
use qutrit_core::states::{from_su3_basis, to_su3_basis, AmplitudeSet, Basis, QUTRIT_LABELS};
use qutrit_core::verify::{verify, VerifyReport};
use qutrit_core::{
    expectation, operator_for, state, states, ExactMatrix, ExactScalar, ExactVector, Group, Label,
};
use serde_json::{json, Value};

use crate::render::{Cells, Document, Table};

fn sparse_entries(m: &ExactMatrix, cells: Cells) -> String {
    m.nonzeros().map(|(i, j, v)| format!("({i},{j}): {}", cells.complex(v))).collect::<Vec<_>>().join("; ")
}

/// `a|ij⟩ + b|kl⟩ …` over the nonzero amplitudes of a `d⊗d` vector.
fn ket_string(v: &ExactVector, d: usize, cells: Cells) -> String {
    v.amplitudes()
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(k, a)| format!("({})|{}{}⟩", cells.complex(a), k / d, k % d))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn groups(group: Option<Group>) -> Vec<Group> {
    group.map_or_else(|| vec![Group::Su2, Group::Su3], |g| vec![g])
}

pub fn generators_dump(group: Option<Group>, cells: Cells) -> Result<Document> {
    let mut entries = Table::new("generator entries", &["group", "generator", "row", "col", "value"]);
    let mut norms = Table::new("Hilbert–Schmidt norms", &["group", "generator", "norm"]);
    let mut tables = Vec::new();
    let mut docs = Vec::new();
    for g in groups(group) {
        let set = GeneratorSet::new(g);
        let mut gens = Vec::new();
        for (i, (m, n)) in set.elements.iter().zip(&set.hs_norms).enumerate() {
            let name = format!("{}{i}", g.symbol());
            for (r, c, v) in m.nonzeros() {
                entries.push(vec![
                    g.to_string(),
                    name.clone(),
                    r.to_string(),
                    c.to_string(),
                    cells.complex(v),
                ]);
            }
            norms.push(vec![g.to_string(), name.clone(), cells.scalar(n)]);
            gens.push(json!({ "index": i, "symbol": name, "hs_norm": n, "matrix": m }));
        }
        let mut doc = json!({ "group": g, "generators": gens });
        if g == Group::Su3 {
            let sc = structure_constants();
            let mut table = Table::new(
                "structure constants (independent, l < m < n for f, l ≤ m ≤ n for d)",
                &["tensor", "l", "m", "n", "value"],
            );
            let mut as_json = |name: &str, list: Vec<(usize, usize, usize, ExactScalar)>| -> Vec<Value> {
                list.into_iter()
                    .map(|(l, m, n, v)| {
                        table.push(vec![
                            name.into(),
                            l.to_string(),
                            m.to_string(),
                            n.to_string(),
                            cells.scalar(&v),
                        ]);
                        json!({ "l": l, "m": m, "n": n, "value": v })
                    })
                    .collect()
            };
            let f = as_json("f", sc.independent_f());
            let d = as_json("d", sc.independent_d());
            doc["structure_constants"] = json!({
                "f": f,
                "d": d,
                "f_totally_antisymmetric": sc.f_is_totally_antisymmetric(),
                "d_totally_symmetric": sc.d_is_totally_symmetric(),
            });
            tables.push(table);
        }
        docs.push(doc);
    }
    tables.insert(0, norms);
    tables.insert(0, entries);
    Ok(Document { json: json!({ "groups": docs }), tables })
}

pub fn states_list(group: Option<Group>, cells: Cells) -> Result<Document> {
    let mut table = Table::new("states", &["label", "name", "group", "generator", "exchange", "amplitudes"]);
    let mut items = Vec::new();
    for g in groups(group) {
        for s in states(g) {
            table.push(vec![
                s.label.as_str().into(),
                s.label.pretty().into(),
                g.to_string(),
                format!("{}{}", g.symbol(), s.generator_index),
                format!("{:?}", s.swap_symmetry).to_lowercase(),
                ket_string(&s.vector, g.dim(), cells),
            ]);
            items.push(json!({
                "label": s.label,
                "group": g,
                "generator_index": s.generator_index,
                "swap_symmetry": s.swap_symmetry,
                "amplitudes": s.vector.amplitudes(),
            }));
        }
    }
    Ok(Document { json: json!({ "states": items }), tables: vec![table] })
}

pub fn basis_change(input: &AmplitudeSet, cells: Cells) -> Result<Document> {
    let out = match input.basis {
        Basis::Computational => to_su3_basis(input),
        Basis::Su3 => from_su3_basis(input),
    }
    .context("basis change")?;
    let mut table = Table::new("amplitudes", &["component", "value"]);
    for (k, v) in out.values.iter().enumerate() {
        let name = match out.basis {
            Basis::Su3 => format!("b[{}]", QUTRIT_LABELS[k].as_str()),
            Basis::Computational => format!("c{}{}", k / 3, k % 3),
        };
        table.push(vec![name, cells.complex(v)]);
    }
    Ok(Document { json: serde_json::to_value(&out)?, tables: vec![table] })
}

fn summary_json(s: &ReducedSummary) -> Result<Value> {
    Ok(json!({
        "label": s.label,
        "reduced_a": s.reduced_a.matrix(),
        "reduced_b": s.reduced_b.matrix(),
        "eigenvalues_a": s.reduced_a.eigenvalues()?,
        "purity": s.purity,
        "entropy": s.entropy,
        "printed_entropy": printed_entropy(s.label),
    }))
}

pub fn density_report(group: Option<Group>, labels: &[Label], cells: Cells) -> Result<Document> {
    let labels: Vec<Label> = if labels.is_empty() {
        groups(group).into_iter().flat_map(|g| Label::all(g).to_vec()).collect()
    } else {
        labels.to_vec()
    };
    let mut table =
        Table::new("reduced states", &["label", "purity", "entropy", "printed entropy", "reduced state A"]);
    let mut items = Vec::new();
    for l in labels {
        let s = reduced_summary(l)?;
        table.push(vec![
            l.as_str().into(),
            cells.scalar(&s.purity),
            format!("{:.10}", s.entropy),
            printed_entropy(l).map_or_else(String::new, |e| e.to_string()),
            sparse_entries(s.reduced_a.matrix(), cells),
        ]);
        items.push(summary_json(&s)?);
    }
    Ok(Document { json: json!({ "states": items }), tables: vec![table] })
}

fn verify_tables(r: &VerifyReport, cells: Cells) -> Vec<Table> {
    let mut expectations = Table::new(
        format!("{} expectation table", r.group),
        &["label", "expectation", "class", "saturated", "projector coefficient", "exact eigenvector"],
    );
    for row in &r.bounds.rows {
        let a = r.projector_coefficients.get(row.label).map(|a| cells.scalar(a)).unwrap_or_default();
        let eig =
            r.eigenvectors.iter().find(|e| e.label == row.label).is_some_and(|e| e.eigenvalue.is_some());
        expectations.push(vec![
            row.label.as_str().into(),
            cells.scalar(&row.expectation),
            row.class.to_string(),
            row.saturated.to_string(),
            a,
            eig.to_string(),
        ]);
    }

    let mut checks = Table::new("checks", &["check", "passed", "detail"]);
    for c in &r.checks {
        checks.push(vec![c.name.into(), c.passed.to_string(), c.detail.clone()]);
    }

    let sym = r.group.symbol();
    let mut generators = Table::new("generator coefficients", &["term", "coefficient"]);
    for t in &r.generator_coefficients {
        generators.push(vec![format!("{sym}{}⊗{sym}{}", t.l, t.m), cells.scalar(&t.value)]);
    }

    let mut comparison =
        Table::new("printed generator coefficients", &["source", "term", "printed", "computed", "matches"]);
    for c in &r.comparison {
        comparison.push(vec![
            c.source.into(),
            format!("{sym}{}⊗{sym}{}", c.l, c.m),
            cells.scalar(&c.printed),
            cells.scalar(&c.computed),
            c.matches.to_string(),
        ]);
    }

    let mut spectrum = Table::new("eigenvalues (float)", &["index", "value"]);
    for (k, v) in r.eigenvalues.iter().enumerate() {
        spectrum.push(vec![k.to_string(), format!("{v:.12}")]);
    }

    let mut operator = Table::new("operator", &["row", "entries"]);
    for i in 0..r.operator.rows() {
        let row: Vec<String> = r.operator.row(i).iter().map(|v| cells.complex(v)).collect();
        operator.push(vec![i.to_string(), row.join(", ")]);
    }

    let mut tables = vec![expectations, checks, generators, comparison, spectrum, operator];
    if !r.errata.is_empty() {
        tables.push(errata_table(&r.errata));
    }
    tables
}

pub fn correlate_verify(group: Group, cells: Cells) -> Result<(Document, bool)> {
    let report = verify(group)?;
    let tables = verify_tables(&report, cells);
    let passed = report.passed();
    let mut json = serde_json::to_value(&report)?;
    json["passed"] = Value::Bool(passed);
    Ok((Document { json, tables }, passed))
}

fn errata_table(list: &[qutrit_core::errata::Erratum]) -> Table {
    let mut t = Table::new("errata", &["id", "title", "item", "printed", "computed", "delta"]);
    for e in list {
        for entry in &e.entries {
            t.push(vec![
                e.id.into(),
                e.title.into(),
                entry.item.clone(),
                entry.printed.clone(),
                entry.computed.clone(),
                entry.delta.clone().unwrap_or_default(),
            ]);
        }
    }
    t
}

pub fn errata_report() -> Result<Document> {
    let list = errata()?;
    Ok(Document { json: json!({ "errata": list }), tables: vec![errata_table(&list)] })
}

pub struct SampleArgs {
    pub label: Label,
    pub shots: u64,
    pub seed: u64,
    pub shards: u32,
}

pub fn sample(args: &SampleArgs, cells: Cells) -> Result<Document> {
    let group = args.label.group();
    let c = operator_for(group);
    let plan = plan_from_operator(&c);
    let s = state(args.label).vector;
    let result = if args.shards > 1 {
        estimate_sharded(&plan, &s, args.shots, args.seed, args.shards)?
    } else {
        estimate(&plan, &s, args.shots, args.seed)?
    };
    let exact = expectation(&c, &s)?;
    let mut table =
        Table::new("sample", &["state", "group", "estimate", "stderr", "exact", "shots_per_term", "seed"]);
    table.push(vec![
        args.label.as_str().into(),
        group.to_string(),
        result.estimate.to_string(),
        result.stderr.to_string(),
        cells.scalar(&exact),
        result.shots_per_term.to_string(),
        result.seed.to_string(),
    ]);
    Ok(Document { json: serde_json::to_value(result)?, tables: vec![table] })
}
