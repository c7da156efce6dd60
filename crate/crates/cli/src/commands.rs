use klcap::limits::{char0_diagram, next_prime, Mismatch};
use klcap::{
    build_table, canonical_diagram, cap_diagram, char0_compare, cocap_diagram, injective_resolution, min_prime,
    split_sequences, stability_check, stable_diagram, tilting_resolution, Flavor, LimitConfig, Orbit, QPoly, Recursion,
    Resolution, SearchBudget, Weight,
};
use serde_json::{json, Value};

use crate::args::{parse_bounds, Algo, Cli, Command, FamilyArg, Format, GroupArgs, KindArg};
use crate::{CliError, Outcome};

type CliResult = Result<Outcome, CliError>;

fn emit(format: Format, text: String, value: Value, mismatches: usize) -> CliResult {
    let body = match format {
        Format::Ascii => text,
        Format::Json => serde_json::to_string_pretty(&value).expect("json values serialize"),
    };
    Ok(Outcome { body, mismatches })
}

pub fn run(cli: &Cli) -> CliResult {
    let f = cli.format;
    match &cli.command {
        Command::Diagram {
            group,
            weight,
            labels,
            caps,
            cocaps,
        } => diagram(f, group, weight, *labels, *caps, *cocaps),
        Command::Orbit { group, weight } => orbit(f, group, weight),
        Command::Poly {
            group,
            weight,
            mu,
            family,
            algo,
        } => poly(f, group, weight, mu.as_ref(), *family, *algo),
        Command::Resolve { group, kind, weight } => resolve(f, group, *kind, weight),
        Command::Limit {
            group,
            delta,
            bounds,
            p1,
            p2,
            t,
            weight,
        } => limit(f, *group, *delta, bounds, *p1, *p2, *t, weight.as_ref()),
    }
}

fn diagram(f: Format, group: &GroupArgs, w: &Weight, labels: bool, caps: bool, cocaps: bool) -> CliResult {
    let cfg = group.config()?;
    let d = canonical_diagram(w, &cfg)?;
    let mut text = if labels {
        d.render_ascii_labeled()
    } else {
        d.render_ascii()
    };
    let seqs = split_sequences(&d);
    let mut value = json!({
        "weight": w.to_string(),
        "diagram": d.to_json(),
        "sequences": [seqs.left.to_string(), seqs.right.to_string()],
    });
    let strands = match (caps, cocaps) {
        (true, _) => Some(cap_diagram(w, &cfg)?),
        (_, true) => Some(cocap_diagram(w, &cfg)?),
        _ => None,
    };
    if let Some(c) = strands {
        text = format!("{text}\n{}", c.render_ascii());
        value["strands"] = c.to_json();
    }
    emit(f, text, value, 0)
}

fn orbit(f: Format, group: &GroupArgs, w: &Weight) -> CliResult {
    let cfg = group.config()?;
    let orbit = Orbit::of(w, &cfg, &SearchBudget::from_env())?;
    let me = orbit
        .position(w)
        .ok_or_else(|| klcap::Error::Invariant(format!("{w} missing from its own orbit")))?;
    let width = orbit.weights().iter().map(|v| v.to_string().len()).max().unwrap_or(0);
    let mut lines = vec![format!("orbit of {w}: {} weights, * marks those below it", orbit.len())];
    let mut rows = Vec::new();
    for i in 0..orbit.len() {
        let below = orbit.leq(i, me);
        let v = orbit.weight(i).to_string();
        lines.push(format!(
            "{} n={:<3} {v:<width$}  {}",
            if below { '*' } else { ' ' },
            orbit.n_value(i),
            orbit.diagram(i).render_ascii()
        ));
        rows.push(json!({
            "weight": v,
            "n": orbit.n_value(i),
            "below": below,
            "diagram": orbit.diagram(i).render_ascii(),
        }));
    }
    emit(
        f,
        lines.join("\n"),
        json!({ "weight": w.to_string(), "members": rows }),
        0,
    )
}

fn family_name(fam: FamilyArg) -> &'static str {
    match fam {
        FamilyArg::D => "d",
        FamilyArg::E => "e",
        FamilyArg::P => "p",
        FamilyArg::R => "r",
    }
}

fn poly(f: Format, group: &GroupArgs, w: &Weight, mu: Option<&Weight>, fam: FamilyArg, algo: Algo) -> CliResult {
    let cfg = group.config()?;
    if algo != Algo::Inversion && matches!(fam, FamilyArg::D | FamilyArg::E) {
        return Err(CliError::Usage(format!(
            "--algo {} only applies to the p and r families",
            if algo == Algo::Both { "both" } else { "recursion" }
        )));
    }
    let table = build_table(w, &cfg)?;
    let orbit = table.orbit();
    let i = orbit
        .position(w)
        .ok_or_else(|| klcap::Error::Invariant(format!("{w} missing from its own orbit")))?;
    let columns: Vec<Option<usize>> = match mu {
        Some(m) => {
            canonical_diagram(m, &cfg)?;
            vec![orbit.position(m)]
        }
        None => (0..table.len()).map(Some).collect(),
    };
    let matrix = match fam {
        FamilyArg::D => table.d(),
        FamilyArg::E => table.e(),
        FamilyArg::P => table.p(),
        FamilyArg::R => table.r(),
    };
    let mut rec = Recursion::new();
    let mut recursive = |j: usize| -> Result<QPoly, CliError> {
        let (l, m) = (orbit.diagram(i), orbit.diagram(j));
        Ok(match fam {
            FamilyArg::P => rec.p(l, m)?,
            _ => rec.r(l, m)?,
        })
    };
    let name = family_name(fam);
    let mut lines = Vec::new();
    let mut entries = Vec::new();
    let mut mismatches = Vec::new();
    for col in columns {
        let (mu_w, value) = match col {
            Some(j) => {
                let inv = matrix[i][j].clone();
                let value = match algo {
                    Algo::Inversion => inv,
                    Algo::Recursion => recursive(j)?,
                    Algo::Both => {
                        let other = recursive(j)?;
                        if other != inv {
                            mismatches.push(json!({
                                "mu": orbit.weight(j).to_string(),
                                "inversion": inv.to_string(),
                                "recursion": other.to_string(),
                            }));
                            lines.push(format!(
                                "mismatch at {}: inversion {inv}, recursion {other}",
                                orbit.weight(j)
                            ));
                        }
                        inv
                    }
                };
                (orbit.weight(j).clone(), value)
            }
            None => (mu.expect("single column").clone(), QPoly::zero()),
        };
        if mu.is_none() && value.is_zero() {
            continue;
        }
        lines.push(format!("{name}({w}, {mu_w}) = {value}"));
        entries.push(json!({ "mu": mu_w.to_string(), "poly": value.to_string(), "coeffs": value }));
    }
    if algo == Algo::Both && mismatches.is_empty() {
        lines.push("inversion and recursion agree".into());
    }
    let count = mismatches.len();
    let value = json!({
        "family": name,
        "lambda": w.to_string(),
        "entries": entries,
        "mismatches": mismatches,
    });
    emit(f, lines.join("\n"), value, count)
}

fn resolve(f: Format, group: &GroupArgs, kind: KindArg, w: &Weight) -> CliResult {
    let cfg = group.config()?;
    let res: Resolution = match kind {
        KindArg::Tilting => tilting_resolution(w, &cfg)?,
        KindArg::Injective => injective_resolution(w, &cfg)?,
    };
    let label = match kind {
        KindArg::Tilting => "tilting",
        KindArg::Injective => "injective",
    };
    let mut lines = vec![format!("{label} resolution of {w}"), "degree  mult  weight".to_string()];
    lines.extend(res.rows().map(|(i, v, m)| format!("{i:<7} {m:<5} {v}")));
    let terms: Vec<Value> = res
        .terms
        .iter()
        .map(|t| {
            t.iter()
                .map(|(v, m)| json!({ "weight": v.to_string(), "mult": m }))
                .collect()
        })
        .collect();
    emit(
        f,
        lines.join("\n"),
        json!({ "kind": label, "subject": w.to_string(), "terms": terms }),
        0,
    )
}

fn mismatch_json(ms: &[Mismatch]) -> Value {
    serde_json::to_value(ms).expect("mismatches serialize")
}

#[allow(clippy::too_many_arguments)]
fn limit(
    f: Format,
    group: Flavor,
    delta: i64,
    bounds: &str,
    p1: Option<u32>,
    p2: Option<u32>,
    t: Option<u32>,
    weight: Option<&Weight>,
) -> CliResult {
    let b = parse_bounds(group, bounds)?;
    let mut lc = match group {
        Flavor::Gl => LimitConfig::gl(delta, b[0], b[1], b[2], b[3]),
        Flavor::Sp => LimitConfig::sp(delta, b[0], b[1]),
    }
    .map_err(|e| CliError::Usage(e.to_string()))?;
    if let Some(t) = t {
        lc = lc.with_t(t);
    }
    let least = min_prime(&lc);
    let p1 = p1.unwrap_or(least);
    let p2 = p2.unwrap_or_else(|| next_prime(&lc, p1.max(least)));
    if p1 == p2 {
        return Err(CliError::Usage("--p1 and --p2 must differ".into()));
    }
    let stab = stability_check(&lc, p1, p2)?;
    let zero = char0_compare(&lc)?;
    let mut lines = vec![
        lc.to_string(),
        format!("smallest admissible prime: {least}"),
        format!(
            "primes {p1} and {p2} (t = {}): {} weights, {} pairs, {} mismatches",
            stab.t,
            stab.weights,
            stab.pairs,
            stab.mismatches.len()
        ),
    ];
    lines.extend(stab.mismatches.iter().map(|m| format!("  {m}")));
    lines.push(format!(
        "characteristic 0 against p = {}: {} weights, {} pairs, {} mismatches",
        zero.p,
        zero.weights,
        zero.pairs,
        zero.mismatches.len()
    ));
    lines.extend(zero.mismatches.iter().map(|m| format!("  {m}")));
    if let Some(note) = &zero.note {
        lines.push(format!("note: {note}"));
    }
    let mut value = json!({
        "config": lc,
        "minPrime": least,
        "stability": {
            "primes": [p1, p2],
            "t": stab.t,
            "weights": stab.weights,
            "pairs": stab.pairs,
            "mismatches": mismatch_json(&stab.mismatches),
        },
        "char0": {
            "p": zero.p,
            "weights": zero.weights,
            "pairs": zero.pairs,
            "mismatches": mismatch_json(&zero.mismatches),
            "note": zero.note,
        },
    });
    if let Some(w) = weight {
        let at_p = stable_diagram(w, &lc, p1)?;
        let limit = char0_diagram(w, &lc)?;
        lines.push(format!("stable diagram of {w} at p = {p1}:\n{}", at_p.render_ascii()));
        lines.push(format!("characteristic 0:\n{}", limit.render_ascii()));
        value["stable"] = json!({ "weight": w.to_string(), "atP": at_p, "char0": limit });
    }
    let count = stab.mismatches.len() + zero.mismatches.len();
    emit(f, lines.join("\n"), value, count)
}
