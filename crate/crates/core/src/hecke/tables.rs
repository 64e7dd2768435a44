//! Tabular exports of d-numbers, Satake matrices and named operators.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::ser::Serializer;
use serde::Serialize;

use super::{named_operator, NamedOp, SatakeMatrix};
use crate::error::{Error, Result};
use crate::qcalc::{d_bullet_number, d_number, LaurentPoly};

/// How `q` is rendered in a table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QSpec {
    Symbolic,
    Integer(i64),
}

impl QSpec {
    fn cell(&self, p: &LaurentPoly) -> Result<Cell> {
        match *self {
            QSpec::Symbolic => Ok(Cell::Poly(p.clone())),
            QSpec::Integer(q) => p
                .eval_integer(&BigInt::from(q))
                .map(Cell::Int)
                .ok_or_else(|| Error::Domain(format!("{p} is not integral at q = {q}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Poly(LaurentPoly),
    Int(BigInt),
    Text(String),
    Missing,
}

impl Cell {
    /// Human-readable form used in CSV output.
    pub fn display(&self) -> String {
        match self {
            Cell::Poly(p) => p.to_unicode(),
            Cell::Int(n) => n.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Missing => "—".into(),
        }
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Cell::Poly(p) => p.serialize(s),
            Cell::Int(n) => match n.to_i64() {
                Some(v) => s.serialize_i64(v),
                None => s.serialize_str(&n.to_string()),
            },
            Cell::Text(t) => s.serialize_str(t),
            Cell::Missing => s.serialize_none(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Table {
    pub kind: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

/// Rows `(r, d_r, d•_r)` for `0 ≤ r ≤ r_max`; `d•_0` is absent.
pub fn dnumber_table(r_max: u32, q: QSpec) -> Result<Table> {
    let mut rows = Vec::new();
    for r in 0..=r_max {
        let bullet = if r == 0 { Cell::Missing } else { q.cell(&d_bullet_number(r)?)? };
        rows.push(vec![Cell::Int(r.into()), q.cell(&d_number(r))?, bullet]);
    }
    Ok(Table {
        kind: "dnumbers".into(),
        columns: vec!["r".into(), "d".into(), "d_bullet".into()],
        rows,
    })
}

/// Row `δ` holds `[N−2i choose δ−i]_{−q}` for `i = 0..=⌊N/2⌋`.
pub fn satake_matrix_table(n: u32, q: QSpec) -> Result<Table> {
    let m = SatakeMatrix::new(n)?;
    let r = (n / 2) as usize;
    let mut columns = vec!["delta".to_string()];
    columns.extend((0..=r).map(|i| format!("i{i}")));
    let rows = m
        .entries
        .iter()
        .enumerate()
        .map(|(d, row)| {
            let mut cells = vec![Cell::Int(d.into())];
            for e in row {
                cells.push(q.cell(e)?);
            }
            Ok(cells)
        })
        .collect::<Result<_>>()?;
    Ok(Table { kind: "satake_matrix".into(), columns, rows })
}

/// One row per operator defined at rank `N`: name, flavor, the expansion
/// as text, then the coefficient of each `T_δ`.
pub fn operator_table(n: u32, q: QSpec) -> Result<Table> {
    let r = n / 2;
    let mut columns = vec!["op".to_string(), "flavor".into(), "expansion".into()];
    columns.extend((0..=r).map(|d| format!("T{d}")));
    let mut rows = Vec::new();
    for op in NamedOp::for_rank(n) {
        let e = named_operator(op, n)?;
        let mut cells = vec![
            Cell::Text(op.name().into()),
            Cell::Text(format!("{:?}", e.flavor()).to_lowercase()),
            Cell::Text(e.to_unicode()),
        ];
        for d in 0..=r {
            cells.push(q.cell(&e.coeff(d))?);
        }
        rows.push(cells);
    }
    Ok(Table { kind: "operators".into(), columns, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dnumber_rows() {
        let t = dnumber_table(1, QSpec::Symbolic).unwrap();
        let disp: Vec<Vec<String>> = t.rows.iter().map(|r| r.iter().map(Cell::display).collect()).collect();
        assert_eq!(disp[0], vec!["0", "1", "—"]);
        assert_eq!(disp[1], vec!["1", "−2q²−q+1", "−q"]);
        let ti = dnumber_table(1, QSpec::Integer(2)).unwrap();
        assert_eq!(ti.rows[1][1], Cell::Int((-9).into()));
    }

    #[test]
    fn operators_rank_three() {
        let t = operator_table(3, QSpec::Symbolic).unwrap();
        let icirc = t.rows.iter().find(|r| r[0] == Cell::Text("Icirc".into())).unwrap();
        assert_eq!(icirc[2], Cell::Text("T1 + (q³+1)·T0".into()));
    }

    #[test]
    fn satake_matrix_json() {
        let t = satake_matrix_table(2, QSpec::Symbolic).unwrap();
        let js = serde_json::to_string(&t.rows).unwrap();
        assert_eq!(js, "[[0,[[0,1]],[]],[1,[[0,1],[1,-1]],[[0,1]]]]");
    }
}
