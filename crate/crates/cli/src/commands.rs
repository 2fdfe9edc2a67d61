//! One function per subcommand; each loads its input and builds a report.

use std::fmt::Write as _;
use std::path::Path;

use serde_json::{json, Value};
use zpr_codes::distances::{
    self, column_distance, column_distance_bound, free_distance_report, FreeDistanceMethod,
};
use zpr_codes::primeness::{self, LfpVerdict};
use zpr_codes::{ConvCode, Error, RingSpec, TruncatedSeries};

use crate::matrix_file;
use crate::report::{indent_matrix, matrix_json, object, poly_json, ring_json, warning, CliError, Input, Report};

pub fn analyze(path: &Path, deg_bound: usize) -> Result<Report, CliError> {
    let input = Input::load(path)?;
    let a = &input.matrix;
    let rep = primeness::analyze(a, deg_bound)?;
    let mut warnings = Vec::new();
    let mut text = String::new();

    let (noncatastrophic, b_degree) = match ConvCode::new(a.clone()) {
        Ok(code) => (json!(code.is_noncatastrophic()), json!(code.b_degree())),
        Err(e @ Error::NotFullRowRank { .. }) => {
            warnings.push(warning("NotFullRowRank", format!("{e}; not an encoder")));
            (Value::Null, Value::Null)
        }
        Err(e) => return Err(e.into()),
    };

    let lfp = match &rep.lfp_verdict {
        LfpVerdict::ImpliedByLzp => json!({ "kind": "ImpliedByLzp" }),
        LfpVerdict::NoFactorUpToBound(bound) => {
            warnings.push(warning(
                "NoFactorUpToBound",
                format!("no non-unimodular left factor with entry degree <= {bound}; factor-primeness is undecided"),
            ));
            json!({ "kind": "NoFactorUpToBound", "deg_bound": bound })
        }
        LfpVerdict::FactorFound { delta, quotient } => json!({
            "kind": "FactorFound",
            "delta": matrix_json(delta),
            "quotient": matrix_json(quotient),
        }),
    };

    writeln!(text, "left zero-prime: {}", rep.is_lzp).unwrap();
    match &rep.lzp_certificate {
        Some(cert) => {
            text.push_str("right inverse:\n");
            text.push_str(&indent_matrix(cert));
        }
        None => text.push_str("right inverse: none\n"),
    }
    writeln!(text, "gcd of projected minors: {}", rep.field_gcd).unwrap();
    writeln!(text, "projected rank: {}", rep.projected_rank).unwrap();
    match &rep.lfp_verdict {
        LfpVerdict::ImpliedByLzp => text.push_str("left factor-prime: yes (zero-prime)\n"),
        LfpVerdict::NoFactorUpToBound(b) => writeln!(text, "left factor-prime: no factor up to degree {b}").unwrap(),
        LfpVerdict::FactorFound { delta, quotient } => {
            text.push_str("left factor-prime: no\nfactor:\n");
            text.push_str(&indent_matrix(delta));
            text.push_str("quotient:\n");
            text.push_str(&indent_matrix(quotient));
        }
    }
    writeln!(text, "noncatastrophic: {}", show(&noncatastrophic)).unwrap();
    writeln!(text, "b-degree: {}", show(&b_degree)).unwrap();

    let results = json!({
        "is_lzp": rep.is_lzp,
        "lzp_certificate": rep.lzp_certificate.as_ref().map(matrix_json),
        "field_gcd": poly_json(&rep.field_gcd),
        "projected_rank": rep.projected_rank,
        "lfp_verdict": lfp,
        "noncatastrophic": noncatastrophic,
        "b_degree": b_degree,
    });
    Ok(Report {
        command: "analyze",
        args: json!({ "deg_bound": deg_bound }),
        input,
        results,
        warnings,
        text,
    })
}

pub fn distance(path: &Path, free: bool, column: Option<usize>, mdp: bool) -> Result<Report, CliError> {
    let input = Input::load(path)?;
    let code = ConvCode::new(input.matrix.clone())?;
    let all = !free && column.is_none() && !mdp;
    let mut results = Vec::new();
    let mut warnings = Vec::new();
    let mut text = String::new();

    if free || all {
        let r = free_distance_report(&code)?;
        let (method, bound) = match r.method {
            FreeDistanceMethod::StateSpace => ("StateSpace", Value::Null),
            FreeDistanceMethod::BoundedEnumeration { deg_bound } => ("BoundedEnumeration", json!(deg_bound)),
        };
        if r.upper_bound_only {
            warnings.push(warning(
                "UpperBoundOnly",
                format!("catastrophic encoder; free distance {} is the minimum over inputs of degree <= {bound}", r.value),
            ));
        }
        writeln!(text, "free distance: {}{}", r.value, if r.upper_bound_only { " (upper bound)" } else { "" }).unwrap();
        results.push((
            "free",
            json!({
                "value": r.value,
                "method": method,
                "deg_bound": bound,
                "upper_bound_only": r.upper_bound_only,
            }),
        ));
    }

    let requested = column;
    let column = column.or(all.then(|| distances::l_index(&code)));
    if (column.is_some() || mdp || all) && !code.is_noncatastrophic() {
        if !all {
            return Err(Error::Catastrophic.into());
        }
        warnings.push(warning(
            "Skipped",
            "column distances and MDP verdict need a noncatastrophic encoder".into(),
        ));
    } else {
        if let Some(max_j) = column {
            text.push_str("   j  d_j^c  bound\n");
            let mut entries = Vec::new();
            for j in 0..=max_j {
                let d = column_distance(&code, j)?;
                let bound = column_distance_bound(&code, j);
                writeln!(text, "{j:>4}  {d:>5}  {bound:>5}{}", if d == bound { "  *" } else { "" }).unwrap();
                entries.push(json!({ "j": j, "distance": d, "bound": bound, "meets_bound": d == bound }));
            }
            results.push(("column", Value::Array(entries)));
        }
        if mdp || all {
            let l = distances::l_index(&code);
            let is_mdp = distances::is_mdp(&code)?;
            let is_mds = distances::is_mds(&code)?;
            let criterion = match distances::mdp_minor_criterion(&code, l) {
                Ok(v) => json!(v),
                Err(e @ Error::SearchTooLarge { .. }) => {
                    warnings.push(warning("SearchTooLarge", format!("minor criterion skipped: {e}")));
                    Value::Null
                }
                Err(e) => return Err(e.into()),
            };
            writeln!(text, "b-degree: {}", code.b_degree()).unwrap();
            writeln!(text, "L-index: {l}").unwrap();
            writeln!(text, "Singleton bound: {}", distances::singleton_bound(&code)).unwrap();
            writeln!(text, "MDP: {is_mdp}").unwrap();
            writeln!(text, "MDS: {is_mds}").unwrap();
            results.push((
                "mdp",
                json!({
                    "b_degree": code.b_degree(),
                    "l_index": l,
                    "singleton_bound": distances::singleton_bound(&code),
                    "is_mdp": is_mdp,
                    "is_mds": is_mds,
                    "minor_criterion": criterion,
                }),
            ));
        }
    }

    Ok(Report {
        command: "distance",
        args: json!({ "free": free, "column": requested, "mdp": mdp }),
        input,
        results: object(results),
        warnings,
        text,
    })
}

pub fn paritycheck(path: &Path) -> Result<Report, CliError> {
    let input = Input::load(path)?;
    let code = ConvCode::new(input.matrix.clone())?;
    let h = code.parity_check()?;
    let verified = code.encoder().mul(h)?.is_zero();
    let mut text = format!("parity check H ({}x{}), G*H = 0: {verified}\n", h.rows(), h.cols());
    text.push_str(&indent_matrix(h));
    let results = json!({ "h": matrix_json(h), "verified": verified });
    Ok(Report {
        command: "paritycheck",
        args: json!({}),
        input,
        results,
        warnings: Vec::new(),
        text,
    })
}

pub fn lift(path: &Path, to: &str, output: Option<&Path>) -> Result<Report, CliError> {
    let input = Input::load(path)?;
    let target = RingSpec::from_modulus_str(to).map_err(|e| CliError::Usage(format!("--to {to}: {e}")))?;
    let code = distances::lift_code(&input.matrix, target)?;
    let rendered = matrix_file::render(code.encoder());
    if let Some(out) = output {
        std::fs::write(out, &rendered).map_err(|e| CliError::Io(out.to_path_buf(), e.to_string()))?;
    }
    let mut text = format!("lifted to Z_{}:\n", target.modulus());
    text.push_str(&indent_matrix(code.encoder()));
    writeln!(text, "noncatastrophic: {}", code.is_noncatastrophic()).unwrap();
    writeln!(text, "b-degree: {}", code.b_degree()).unwrap();
    match output {
        Some(out) => writeln!(text, "wrote {}", out.display()).unwrap(),
        None => {
            text.push('\n');
            text.push_str(&rendered);
        }
    }
    let results = json!({
        "ring": ring_json(target),
        "rows": matrix_json(code.encoder()),
        "noncatastrophic": code.is_noncatastrophic(),
        "b_degree": code.b_degree(),
        "matrix_file": rendered,
        "output": output.map(|p| p.display().to_string()),
    });
    Ok(Report {
        command: "lift",
        args: json!({ "to": to, "output": output.map(|p| p.display().to_string()) }),
        input,
        results,
        warnings: Vec::new(),
        text,
    })
}

pub fn demo_catastrophic(path: &Path, horizon: usize) -> Result<Report, CliError> {
    let input = Input::load(path)?;
    let code = ConvCode::new(input.matrix.clone())?;
    let demo = code.catastrophic_demo(horizon)?;

    let mut text = format!("gcd of projected row: {}\n", demo.gcd);
    writeln!(text, "input:  {}", series_string(&demo.input)).unwrap();
    writeln!(text, "output: {}", series_string(&demo.output)).unwrap();
    text.push_str("   t  wt(u)  wt(uG)\n");
    let mut table = Vec::new();
    let (mut wu, mut wv) = (0, 0);
    for t in 0..=horizon {
        wu += nonzero_at(&demo.input, t);
        wv += nonzero_at(&demo.output, t);
        writeln!(text, "{t:>4}  {wu:>5}  {wv:>6}").unwrap();
        table.push(json!({ "t": t, "input_weight": wu, "output_weight": wv }));
    }
    writeln!(text, "output vanishes past degree {}: {}", code.memory(), demo.tail_is_zero).unwrap();

    let results = json!({
        "gcd": poly_json(&demo.gcd),
        "horizon": horizon,
        "input": demo.input.iter().map(|s| s.to_poly().to_string()).collect::<Vec<_>>(),
        "output": demo.output.iter().map(|s| s.to_poly().to_string()).collect::<Vec<_>>(),
        "input_weight": demo.input_weight,
        "output_weight": demo.output_weight,
        "tail_is_zero": demo.tail_is_zero,
        "table": table,
    });
    Ok(Report {
        command: "demo-catastrophic",
        args: json!({ "horizon": horizon }),
        input,
        results,
        warnings: Vec::new(),
        text,
    })
}

fn nonzero_at(series: &[TruncatedSeries], t: usize) -> usize {
    series.iter().filter(|s| s.coeff(t) != 0).count()
}

fn series_string(series: &[TruncatedSeries]) -> String {
    let cells: Vec<String> = series.iter().map(|s| s.to_poly().to_string()).collect();
    format!("[{}] + O(d^{})", cells.join(", "), series.first().map_or(0, |s| s.horizon() + 1))
}

fn show(v: &Value) -> String {
    match v {
        Value::Null => "n/a".into(),
        other => other.to_string(),
    }
}
