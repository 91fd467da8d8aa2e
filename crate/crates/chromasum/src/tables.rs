//! Table rendering in aligned-text and CSV forms.
//!
//! The integer and fraction grids mirror the layouts used for eyeball
//! comparison; CSV is the stable machine form the golden files pin down.
//! Circular polynumber rows are printed as `k,l,2^{k+l},c0.. ` with the
//! integer coefficients of `2^{k+l} pi_{k,l}`, which is exact.


use crate::arith::{int_pow, BigInt};
use crate::chromogeometry::Color;
use crate::error::{Error, Result};
use crate::finite_field::{Field, FieldElement};
use crate::fourier::psi_closed;
use crate::polynumber::circular_polynumber;
use crate::super_catalan::SuperCatalanTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Text,
    Csv,
}

impl std::str::FromStr for TableFormat {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "text" => Ok(TableFormat::Text),
            "csv" => Ok(TableFormat::Csv),
            other => Err(format!("unknown format {other:?} (expected text or csv)")),
        }
    }
}

fn render_labeled_grid(
    corner: &str,
    cols: &[String],
    rows: &[(String, Vec<String>)],
    format: TableFormat,
) -> String {
    match format {
        TableFormat::Csv => {
            let mut out = String::new();
            out.push_str(corner);
            for c in cols {
                out.push(',');
                out.push_str(c);
            }
            out.push('\n');
            for (label, cells) in rows {
                out.push_str(label);
                for cell in cells {
                    out.push(',');
                    out.push_str(cell);
                }
                out.push('\n');
            }
            out
        }
        TableFormat::Text => {
            let mut widths = vec![corner.len()];
            widths.extend(cols.iter().map(String::len));
            for (label, cells) in rows {
                widths[0] = widths[0].max(label.len());
                for (i, cell) in cells.iter().enumerate() {
                    widths[i + 1] = widths[i + 1].max(cell.len());
                }
            }
            let mut out = String::new();
            let mut line = format!("{:>w$}", corner, w = widths[0]);
            for (i, c) in cols.iter().enumerate() {
                line.push_str(&format!("  {:>w$}", c, w = widths[i + 1]));
            }
            out.push_str(line.trim_end());
            out.push('\n');
            for (label, cells) in rows {
                let mut line = format!("{:>w$}", label, w = widths[0]);
                for (i, cell) in cells.iter().enumerate() {
                    line.push_str(&format!("  {:>w$}", cell, w = widths[i + 1]));
                }
                out.push_str(line.trim_end());
                out.push('\n');
            }
            out
        }
    }
}

/// The `S(m, n)` grid for `0 <= m, n <= max`.
pub fn render_super_catalan(max: u64, format: TableFormat) -> Result<String> {
    if max > 64 {
        return Err(Error::BadRange(format!("table size {max} out of range (max 64)")));
    }
    let table = SuperCatalanTable::new(max, max);
    let cols: Vec<String> = (0..=max).map(|n| n.to_string()).collect();
    let rows = table
        .s_values
        .iter()
        .enumerate()
        .map(|(m, row)| (m.to_string(), row.iter().map(BigInt::to_string).collect()))
        .collect::<Vec<_>>();
    Ok(render_labeled_grid("m\\n", &cols, &rows, format))
}

/// The `Omega(m, n)` grid for `0 <= m, n <= max`, cells as reduced
/// fractions `num/den` (`den` omitted when 1).
pub fn render_omega(max: u64, format: TableFormat) -> Result<String> {
    if max > 64 {
        return Err(Error::BadRange(format!("table size {max} out of range (max 64)")));
    }
    let table = SuperCatalanTable::new(max, max);
    let cols: Vec<String> = (0..=max).map(|n| n.to_string()).collect();
    let rows = table
        .omega_values
        .iter()
        .enumerate()
        .map(|(m, row)| (m.to_string(), row.iter().map(|v| v.to_string()).collect()))
        .collect::<Vec<_>>();
    Ok(render_labeled_grid("m\\n", &cols, &rows, format))
}

/// Circular polynumbers `pi_{k,l}` for `k + l <= max_sum`, one row per pair,
/// grouped by the sum and ordered by `k` within a group. Each row lists the
/// common denominator `2^{k+l}` followed by the integer coefficients of
/// `2^{k+l} pi_{k,l}` from the constant term up.
pub fn render_circular(max_sum: u64, format: TableFormat) -> Result<String> {
    if max_sum > 40 {
        return Err(Error::BadRange(format!("table size {max_sum} out of range (max 40)")));
    }
    let mut out = String::new();
    if format == TableFormat::Csv {
        out.push_str("k,l,den,coefficients\n");
    }
    for total in 0..=max_sum {
        for k in 0..=total {
            let l = total - k;
            let pi = circular_polynumber(k, l);
            let den = int_pow(2, total);
            let ints: Vec<String> = (0..=total)
                .map(|i| {
                    let c = pi.coefficient_at(i);
                    let scaled = c.numer() * (&den / c.denom());
                    scaled.to_string()
                })
                .collect();
            match format {
                TableFormat::Csv => {
                    out.push_str(&format!("{k},{l},{den},{}\n", ints.join(",")));
                }
                TableFormat::Text => {
                    out.push_str(&format!("pi_{{{k},{l}}} = 1/{den} * ({})\n", ints.join(", ")));
                }
            }
        }
    }
    Ok(out)
}

/// Values `psi(a^{2m} b^{2n})` for `0 <= m, n <= max` over one color and
/// field, via the closed form.
pub fn render_psi_grid(
    color: Color,
    field: &Field,
    max: u64,
    format: TableFormat,
) -> Result<String> {
    if max > 128 {
        return Err(Error::BadRange(format!("table size {max} out of range (max 128)")));
    }
    let cols: Vec<String> = (0..=max).map(|n| n.to_string()).collect();
    let rows: Vec<(String, Vec<String>)> = (0..=max)
        .map(|m| {
            let cells = (0..=max)
                .map(|n| render_element(&psi_closed(color, field, 2 * m, 2 * n)))
                .collect();
            (m.to_string(), cells)
        })
        .collect();
    Ok(render_labeled_grid("m\\n", &cols, &rows, format))
}

fn render_element(v: &FieldElement) -> String {
    match v.as_prime_residue() {
        Some(r) => r.to_string(),
        None => v.to_string(),
    }
}
