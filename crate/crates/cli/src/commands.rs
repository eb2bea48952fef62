//! Payload builders for each subcommand. Every function is pure in its
//! arguments; rendering to text, CSV or JSON happens here as well so that the
//! verification suites can compare against exactly what the binary prints.

use gamma_core::exactalg::format_ratfn;
use gamma_core::ideal::{min_gens, min_gens_brute};
use gamma_core::series::{
    betti_numbers_ideal, check_conjecture, ek_poincare_ideal, ek_poincare_ideal_graded,
    golod_poincare, golod_poincare_graded, hilbert_bigraded,
};
use gamma_core::{Error, GenTable, IntPoly, Integer, Result};
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// A command result in every format it supports.
pub struct Rendered {
    pub text: String,
    pub csv: Option<String>,
    pub json: Value,
}

pub fn check_level(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::LevelTooSmall(n));
    }
    Ok(())
}

/// JSON number when it fits in an i64, decimal string otherwise.
pub fn int_json(v: &Integer) -> Value {
    v.to_i64().map_or_else(|| Value::String(v.to_string()), Value::from)
}

fn poly_json(p: &IntPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|((i, j), c)| json!({"t": i, "u": j, "c": int_json(c)}))
        .collect();
    json!({"text": p.to_string(), "terms": terms})
}

pub fn gens(n: u64, brute: bool) -> Result<Rendered> {
    let table = if brute { min_gens_brute(n)? } else { min_gens(n)? };
    let mut text = String::new();
    let mut csv = String::from("weight,monomial,v,degree\n");
    let mut rows = Vec::new();
    for g in table.generators() {
        let (w, v, d) = (g.weight(), g.min_index().unwrap_or(0), g.total_degree());
        text += &format!("{w}\t{g}\n");
        csv += &format!("{w},{g},{v},{d}\n");
        rows.push(json!({"weight": w, "monomial": g, "v": v, "degree": d}));
    }
    Ok(Rendered { text, csv: Some(csv), json: Value::Array(rows) })
}

fn tables(nmax: u64) -> Result<Vec<GenTable>> {
    check_level(nmax)?;
    (2..=nmax).map(min_gens).collect()
}

/// Header `n,C_n,C_n_1,...,C_n_R` with `R = r(nmax)`; short rows padded
/// with empty cells.
pub fn counts_csv(tables: &[GenTable]) -> String {
    let width = tables.iter().map(GenTable::r).max().unwrap_or(0);
    let mut out = String::from("n,C_n");
    for v in 1..=width {
        out += &format!(",C_n_{v}");
    }
    out.push('\n');
    for t in tables {
        out += &format!("{},{}", t.n(), t.total());
        for v in 1..=width {
            if v <= t.r() {
                out += &format!(",{}", t.count(v));
            } else {
                out.push(',');
            }
        }
        out.push('\n');
    }
    out
}

/// One row per `(n, v)`: `counts[d - 2] = C_{n,v,d}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedRow {
    pub n: u64,
    pub v: usize,
    pub counts: Vec<usize>,
}

pub fn graded_rows(tables: &[GenTable]) -> Vec<GradedRow> {
    tables
        .iter()
        .flat_map(|t| {
            (1..=t.r()).map(move |v| GradedRow {
                n: t.n(),
                v,
                counts: t.graded_row(v).to_vec(),
            })
        })
        .collect()
}

pub fn counts(nmax: u64, graded: bool) -> Result<Rendered> {
    let tables = tables(nmax)?;
    if graded {
        let rows = graded_rows(&tables);
        let width = rows.iter().map(|r| r.counts.len()).max().unwrap_or(0);
        let mut text = String::new();
        let mut csv = String::from("n,v");
        for d in 2..width + 2 {
            csv += &format!(",C_d{d}");
        }
        csv.push('\n');
        for r in &rows {
            let cells: Vec<String> = r.counts.iter().map(usize::to_string).collect();
            text += &format!("n={} v={}: {}\n", r.n, r.v, cells.join(" "));
            csv += &format!("{},{}", r.n, r.v);
            for d in 0..width {
                match r.counts.get(d) {
                    Some(c) => csv += &format!(",{c}"),
                    None => csv.push(','),
                }
            }
            csv.push('\n');
        }
        return Ok(Rendered { text, csv: Some(csv), json: serde_json::to_value(rows).expect("plain data") });
    }
    let mut text = String::new();
    let mut rows = Vec::new();
    for t in &tables {
        let parts: Vec<String> = t.counts().iter().map(usize::to_string).collect();
        text += &format!("{}: {} = {}\n", t.n(), t.total(), parts.join(" + "));
        rows.push(json!({"n": t.n(), "C_n": t.total(), "C_n_v": t.counts()}));
    }
    Ok(Rendered { text, csv: Some(counts_csv(&tables)), json: Value::Array(rows) })
}

pub fn hilbert(n: u64, bigraded: bool) -> Result<Rendered> {
    check_level(n)?;
    let h = hilbert_bigraded(n);
    let p = if bigraded { h.poly.clone() } else { h.by_degree() };
    Ok(Rendered {
        text: format!("{p}\n"),
        csv: None,
        json: json!({"series": poly_json(&p), "dim": int_json(&h.total())}),
    })
}

pub fn betti(n: u64) -> Result<Rendered> {
    let b = betti_numbers_ideal(n)?;
    let text: Vec<String> = b.iter().map(Integer::to_string).collect();
    let mut csv = String::from("q,beta\n");
    for (q, v) in b.iter().enumerate() {
        csv += &format!("{q},{v}\n");
    }
    Ok(Rendered {
        text: format!("{}\n", text.join(" ")),
        csv: Some(csv),
        json: Value::Array(b.iter().map(int_json).collect()),
    })
}

/// Canonical text of the requested Poincaré series.
pub fn poincare_text(n: u64, graded: bool, ideal: bool) -> Result<String> {
    Ok(match (ideal, graded) {
        (true, false) => ek_poincare_ideal(n)?.to_string(),
        (true, true) => ek_poincare_ideal_graded(n)?.to_string(),
        (false, false) => format_ratfn(&golod_poincare(n)?),
        (false, true) => format_ratfn(&golod_poincare_graded(n)?),
    })
}

pub fn poincare(n: u64, graded: bool, ideal: bool) -> Result<Rendered> {
    let s = poincare_text(n, graded, ideal)?;
    let json = if ideal {
        let p = if graded { ek_poincare_ideal_graded(n)? } else { ek_poincare_ideal(n)? };
        poly_json(&p)
    } else {
        let f = if graded { golod_poincare_graded(n)? } else { golod_poincare(n)? };
        json!({"text": s, "numerator": poly_json(f.numerator()), "denominator": poly_json(f.denominator())})
    };
    Ok(Rendered { text: format!("{s}\n"), csv: None, json })
}

pub fn conjecture(nmax: u64) -> Result<Rendered> {
    check_level(nmax)?;
    let reports = (2..=nmax).map(check_conjecture).collect::<Result<Vec<_>>>()?;
    let mut text = String::from("n\tl1\tl1_pred\tl2\th\tq(-1)\tstatus\n");
    let mut csv = String::from("n,ell1,ell1_predicted,ell2,h,q_at_minus_one,failures\n");
    let mut failures = 0;
    for r in &reports {
        let h: Vec<String> = r.h.iter().map(Integer::to_string).collect();
        let failed = r.clauses.failures();
        let status = if failed.is_empty() {
            "ok".to_string()
        } else {
            failures += 1;
            format!("FAIL {}", failed.join(","))
        };
        text += &format!(
            "{}\t{}\t{}\t{}\t[{}]\t{}\t{}\n",
            r.n, r.ell1, r.ell1_predicted, r.ell2, h.join(", "), r.q_at_minus_one, status
        );
        csv += &format!(
            "{},{},{},{},{},{},{}\n",
            r.n, r.ell1, r.ell1_predicted, r.ell2, h.join(" "), r.q_at_minus_one, failed.join(" ")
        );
    }
    text += &format!("levels with clause failures: {failures}\n");
    Ok(Rendered {
        text,
        csv: Some(csv),
        json: json!({"reports": reports, "failing_levels": failures}),
    })
}

