use std::io::Write;

use num_bigint::BigUint;
use permclass::partition::{
    self, format_real, precision_digits, relative_error_int, relative_error_real,
};
use permclass::text::{parse_permutation_input, parse_scalar_matrix};
use permclass::{
    are_permutation_similar, canonical_form, cycle_factors, cycle_summands,
    enumerate_class_representatives, monomial_canonical, monomial_from_matrix, monomial_split,
    partition_exact, CycleType, Permutation, Scalar, Similarity, SparseBinaryMatrix,
};
use serde_json::{json, Map, Value};

use crate::{verify, Cli, CliError, Command, MonomialAction, Pcount, Source};

type Out<'a> = &'a mut dyn Write;
type Outcome = Result<(), CliError>;

/// Every JSON document carries the same top-level fields; those that do not
/// apply to a command are `null`.
fn document(command: &str) -> Map<String, Value> {
    let mut doc = Map::new();
    doc.insert("command".into(), json!(command));
    for key in [
        "order",
        "cycle_type",
        "canonical",
        "conjugator",
        "summands",
        "factors",
        "witness",
        "counts",
    ] {
        doc.insert(key.into(), Value::Null);
    }
    doc
}

fn emit(out: Out<'_>, doc: Map<String, Value>) -> Outcome {
    writeln!(out, "{}", Value::Object(doc))?;
    Ok(())
}

fn images(p: &Permutation) -> Value {
    json!(p.images())
}

fn cycle_type_json(ct: &CycleType) -> Value {
    json!({ "t": ct.fixed_points(), "lengths": ct.lengths() })
}

fn entries_json(m: &SparseBinaryMatrix) -> Value {
    json!(m.entries().iter().map(|&(r, c)| [r, c]).collect::<Vec<_>>())
}

fn scalars(v: &[Scalar]) -> Value {
    json!(v.iter().map(Scalar::to_string).collect::<Vec<_>>())
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn entry_list(m: &SparseBinaryMatrix) -> String {
    join(m.entries().iter().map(|(r, c)| format!("({r},{c})")))
}

pub(crate) fn execute(cli: &Cli, source: &mut Source<'_>, out: Out<'_>) -> Outcome {
    match &cli.command {
        Command::Canon(i) => canon(cli, &read_perm(cli, source, &i.input)?, out),
        Command::Decompose(i) => decompose(cli, &read_perm(cli, source, &i.input)?, out),
        Command::Factor(i) => factor(cli, &read_perm(cli, source, &i.input)?, out),
        Command::Similar { a, b } => {
            let a = read_perm(cli, source, a)?;
            let b = read_perm(cli, source, b)?;
            similar(cli, &a, &b, out)
        }
        Command::Pcount(args) => pcount(cli, args, out),
        Command::Classes { n } => classes(cli, *n, out),
        Command::Monomial { action, input } => monomial(cli, *action, &source.read(input)?, out),
    }
}

fn read_perm(cli: &Cli, source: &mut Source<'_>, path: &str) -> Result<Permutation, CliError> {
    let text = source.read(path)?;
    parse_permutation_input(&text, &cli.parse_options())
        .map_err(|e| CliError::Input(format!("{path}: {e}")))
}

fn canon(cli: &Cli, a: &Permutation, out: Out<'_>) -> Outcome {
    let d = canonical_form(a);
    verify::canonical(a, &d)?;
    if cli.json {
        let mut doc = document("canon");
        doc.insert("order".into(), json!(a.n()));
        doc.insert("cycle_type".into(), cycle_type_json(&d.cycle_type));
        doc.insert("canonical".into(), images(&d.canonical));
        doc.insert("conjugator".into(), images(&d.conjugator));
        return emit(out, doc);
    }
    writeln!(out, "order: {}", a.n())?;
    writeln!(out, "cycle type: {}", d.cycle_type)?;
    writeln!(out, "canonical: {}", d.canonical)?;
    writeln!(out, "conjugator: {}", d.conjugator)?;
    Ok(())
}

fn decompose(cli: &Cli, a: &Permutation, out: Out<'_>) -> Outcome {
    let d = cycle_summands(a);
    verify::summands(a, &d)?;
    let fixed: Vec<usize> = d.fixed_diagonal.entries().iter().map(|&(_, c)| c).collect();
    if cli.json {
        let mut doc = document("decompose");
        doc.insert("order".into(), json!(a.n()));
        doc.insert(
            "cycle_type".into(),
            cycle_type_json(&permclass::cycle_type(a)),
        );
        let summands: Vec<Value> = d
            .summands
            .iter()
            .zip(&d.orders)
            .map(|(q, k)| json!({ "order": k, "entries": entries_json(q) }))
            .collect();
        doc.insert("summands".into(), json!(summands));
        doc.insert("fixed_diagonal".into(), json!(fixed));
        return emit(out, doc);
    }
    writeln!(out, "order: {}", a.n())?;
    writeln!(out, "cycle type: {}", permclass::cycle_type(a))?;
    if d.summands.is_empty() {
        writeln!(out, "identity: no cycle summands")?;
    }
    for (i, (q, k)) in d.summands.iter().zip(&d.orders).enumerate() {
        writeln!(out, "Q{} (order {k}): {}", i + 1, entry_list(q))?;
    }
    writeln!(out, "D (fixed points): {}", join(&fixed))?;
    Ok(())
}

fn factor(cli: &Cli, a: &Permutation, out: Out<'_>) -> Outcome {
    let f = cycle_factors(a);
    verify::factors(a, &f)?;
    if cli.json {
        let mut doc = document("factor");
        doc.insert("order".into(), json!(a.n()));
        doc.insert(
            "cycle_type".into(),
            cycle_type_json(&permclass::cycle_type(a)),
        );
        let factors: Vec<Value> = f
            .factors
            .iter()
            .zip(&f.orders)
            .map(|(p, k)| json!({ "order": k, "images": images(p) }))
            .collect();
        doc.insert("factors".into(), json!(factors));
        return emit(out, doc);
    }
    writeln!(out, "order: {}", a.n())?;
    writeln!(out, "cycle type: {}", permclass::cycle_type(a))?;
    if f.factors.is_empty() {
        writeln!(out, "identity: no factors")?;
    }
    for (i, (p, k)) in f.factors.iter().zip(&f.orders).enumerate() {
        writeln!(out, "P{} (order {k}): {p}", i + 1)?;
    }
    Ok(())
}

fn similar(cli: &Cli, a: &Permutation, b: &Permutation, out: Out<'_>) -> Outcome {
    let verdict = are_permutation_similar(a, b)?;
    if let Similarity::Similar { witness } = &verdict {
        verify::witness(a, b, witness)?;
    } else if permclass::cycle_type(a) == permclass::cycle_type(b) {
        return Err(CliError::Verification(
            "equal cycle types reported dissimilar".into(),
        ));
    }
    let witness = match &verdict {
        Similarity::Similar { witness } => Some(witness),
        Similarity::NotSimilar => None,
    };
    if cli.json {
        let mut doc = document("similar");
        doc.insert("order".into(), json!(a.n()));
        doc.insert("similar".into(), json!(verdict.is_similar()));
        doc.insert("witness".into(), witness.map_or(Value::Null, images));
        doc.insert(
            "cycle_types".into(),
            json!([
                cycle_type_json(&permclass::cycle_type(a)),
                cycle_type_json(&permclass::cycle_type(b))
            ]),
        );
        return emit(out, doc);
    }
    match witness {
        Some(w) => {
            writeln!(out, "similar")?;
            writeln!(out, "cycle type: {}", permclass::cycle_type(a))?;
            writeln!(out, "witness: {w}")?;
        }
        None => {
            writeln!(out, "not similar")?;
            writeln!(
                out,
                "cycle types: {} vs {}",
                permclass::cycle_type(a),
                permclass::cycle_type(b)
            )?;
        }
    }
    Ok(())
}

fn format_error(e: f64) -> String {
    format!("{e:.3e}")
}

/// One CSV row: `n, p_exact, hr_estimate, modified_estimate, relative_error`.
/// The modified estimate switches from the small-n to the large-n form at 80
/// and is empty below 3; the error column refers to it.
struct Row {
    n: u64,
    exact: BigUint,
    hr: String,
    modified: Option<BigUint>,
    error: Option<f64>,
}

fn table_row(n: u64, digits: usize) -> Result<Row, CliError> {
    let exact = partition_exact(n);
    let hr = format_real(&partition::hr_estimate_with(n, digits)?, 20);
    let modified = if n >= partition::LARGE_MIN {
        Some(partition::modified_estimate_large_with(n, digits)?)
    } else if partition::SMALL_RANGE.contains(&n) {
        Some(partition::modified_estimate_small_with(n, digits)?)
    } else {
        None
    };
    let error = modified.as_ref().map(|m| relative_error_int(m, &exact));
    Ok(Row {
        n,
        exact,
        hr,
        modified,
        error,
    })
}

fn pcount(cli: &Cli, args: &Pcount, out: Out<'_>) -> Outcome {
    let n = args.n;
    let digits = precision_digits();
    if args.table {
        if n == 0 {
            return Err(CliError::Input("the table starts at n = 1".into()));
        }
        let mut rows = Vec::new();
        if !cli.json {
            writeln!(
                out,
                "n,p_exact,hr_estimate,modified_estimate,relative_error"
            )?;
        }
        for k in 1..=n {
            let row = table_row(k, digits)?;
            if cli.json {
                rows.push(json!({
                    "n": row.n.to_string(),
                    "p_exact": row.exact.to_string(),
                    "hr_estimate": row.hr,
                    "modified_estimate": row.modified.as_ref().map(BigUint::to_string),
                    "relative_error": row.error.map(format_error),
                }));
            } else {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    row.n,
                    row.exact,
                    row.hr,
                    row.modified.map(|m| m.to_string()).unwrap_or_default(),
                    row.error.map(format_error).unwrap_or_default()
                )?;
            }
        }
        if cli.json {
            let mut doc = document("pcount");
            doc.insert("counts".into(), json!(rows));
            return emit(out, doc);
        }
        return Ok(());
    }

    let exact = partition_exact(n);
    let (kind, estimate, error) = if args.hr {
        let x = partition::hr_estimate_with(n, digits)?;
        (
            "hr",
            Some(format_real(&x, digits)),
            Some(relative_error_real(&x, &exact)),
        )
    } else if args.small || args.large {
        let m = if args.small {
            partition::modified_estimate_small_with(n, digits)?
        } else {
            partition::modified_estimate_large_with(n, digits)?
        };
        let err = relative_error_int(&m, &exact);
        (
            if args.small { "small" } else { "large" },
            Some(m.to_string()),
            Some(err),
        )
    } else {
        ("exact", None, None)
    };
    if cli.json {
        let mut doc = document("pcount");
        let mut counts = json!({ "n": n.to_string(), "p_exact": exact.to_string(), "kind": kind });
        if let Some(e) = &estimate {
            counts["estimate"] = json!(e);
            counts["relative_error"] = json!(error.map(format_error));
        }
        doc.insert("counts".into(), counts);
        return emit(out, doc);
    }
    match estimate {
        None => writeln!(out, "{exact}")?,
        Some(e) => {
            writeln!(out, "estimate: {e}")?;
            writeln!(out, "exact: {exact}")?;
            writeln!(
                out,
                "relative error: {}",
                error.map(format_error).unwrap_or_default()
            )?;
        }
    }
    Ok(())
}

fn classes(cli: &Cli, n: u64, out: Out<'_>) -> Outcome {
    if n == 0 {
        return Err(CliError::Input("classes needs n >= 1".into()));
    }
    let order = usize::try_from(n).map_err(|_| CliError::Input(format!("n = {n} is too large")))?;
    let expected = partition_exact(n);
    if cli.json {
        let mut head = document("classes");
        head.insert("order".into(), json!(order));
        head.insert("counts".into(), json!({ "classes": expected.to_string() }));
        // stream the array inside one document
        let text = Value::Object(head).to_string();
        write!(out, "{},\"representatives\":[", &text[..text.len() - 1])?;
    } else {
        writeln!(out, "# {expected} classes of order {n}")?;
    }
    let mut count = BigUint::from(0u32);
    for r in enumerate_class_representatives(order) {
        let d = canonical_form(&r);
        if d.canonical != r {
            return Err(CliError::Verification(format!("{r} is not canonical")));
        }
        if cli.json {
            let item =
                json!({ "cycle_type": cycle_type_json(&d.cycle_type), "canonical": images(&r) });
            let sep = if count == BigUint::from(0u32) {
                ""
            } else {
                ","
            };
            write!(out, "{sep}{item}")?;
        } else {
            writeln!(out, "{}: {r}", d.cycle_type)?;
        }
        count += 1u32;
    }
    if cli.json {
        writeln!(out, "]}}")?;
    }
    if count != expected {
        return Err(CliError::Verification(format!(
            "streamed {count} classes, expected {expected}"
        )));
    }
    Ok(())
}

fn monomial(cli: &Cli, action: MonomialAction, text: &str, out: Out<'_>) -> Outcome {
    let dense = parse_scalar_matrix(text, &cli.parse_options())?;
    let m = monomial_from_matrix(&dense)?;
    match action {
        MonomialAction::Split => {
            let s = monomial_split(&m);
            verify::split(&m, &s)?;
            if cli.json {
                let mut doc = document("monomial-split");
                doc.insert("order".into(), json!(m.n()));
                doc.insert(
                    "monomial".into(),
                    json!({ "perm": images(&s.perm), "d1": scalars(&s.row_diag), "d2": scalars(&s.col_diag) }),
                );
                return emit(out, doc);
            }
            writeln!(out, "order: {}", m.n())?;
            writeln!(out, "P: {}", s.perm)?;
            writeln!(out, "D1: {}", join(&s.row_diag))?;
            writeln!(out, "D2: {}", join(&s.col_diag))?;
        }
        MonomialAction::Canon => {
            let c = monomial_canonical(&m);
            verify::monomial_canonical(&m, &c)?;
            let ct = permclass::cycle_type(m.perm());
            if cli.json {
                let mut doc = document("monomial-canon");
                doc.insert("order".into(), json!(m.n()));
                doc.insert("cycle_type".into(), cycle_type_json(&ct));
                doc.insert("canonical".into(), images(&c.canonical_perm));
                doc.insert("conjugator".into(), images(&c.conjugator));
                doc.insert(
                    "monomial".into(),
                    json!({ "d3": scalars(&c.left_diag), "d4": scalars(&c.right_diag) }),
                );
                return emit(out, doc);
            }
            writeln!(out, "order: {}", m.n())?;
            writeln!(out, "cycle type: {ct}")?;
            writeln!(out, "T: {}", c.conjugator)?;
            writeln!(out, "Y: {}", c.canonical_perm)?;
            writeln!(out, "D3: {}", join(&c.left_diag))?;
            writeln!(out, "D4: {}", join(&c.right_diag))?;
        }
    }
    Ok(())
}
