use std::fmt::Write as _;

use polymset::semiring::Tetratomy;
use polymset::Polymset;
use thiserror::Error;

use crate::eval::Value;

/// Output style for polymsets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Style {
    /// `{(i,j):m, ...}`, or `{dim=m}` when empty.
    #[default]
    Sparse,
    /// Dense rows `[[a, b], [c, d]]` over the bounding box from the origin;
    /// first coordinate is the row. Two-dimensional values only.
    Matrix,
}

/// Largest grid the matrix style will print.
pub const MATRIX_CELL_LIMIT: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("matrix style needs a 2-dimensional value, got dimension {0}")]
    UnsupportedStyle(usize),
    #[error("matrix of {rows}x{cols} cells is too large to print")]
    TooLarge { rows: u64, cols: u64 },
}

pub fn render(value: &Value, style: Style) -> Result<String, RenderError> {
    match value {
        Value::Polymset(p) => render_polymset(p, style),
        Value::Scalar(n) => Ok(n.to_string()),
        Value::Comparison(t) => Ok(match t {
            Tetratomy::Equal => "Equal".to_string(),
            Tetratomy::Incomparable => "Incomparable".to_string(),
            Tetratomy::GreaterBy(w) => format!("GreaterBy({})", render_polymset(w, style)?),
            Tetratomy::LessBy(w) => format!("LessBy({})", render_polymset(w, style)?),
        }),
    }
}

pub fn render_polymset(p: &Polymset, style: Style) -> Result<String, RenderError> {
    match style {
        Style::Sparse => Ok(p.to_string()),
        Style::Matrix => matrix(p),
    }
}

fn matrix(p: &Polymset) -> Result<String, RenderError> {
    if p.dim() != 2 {
        return Err(RenderError::UnsupportedStyle(p.dim()));
    }
    if p.is_empty() {
        return Ok("[]".to_string());
    }
    let (rows, cols) = p.indices().fold((0u64, 0u64), |(r, c), k| {
        (r.max(k.coords()[0]), c.max(k.coords()[1]))
    });
    let (rows, cols) = (rows.saturating_add(1), cols.saturating_add(1));
    if rows.checked_mul(cols).is_none_or(|n| n > MATRIX_CELL_LIMIT) {
        return Err(RenderError::TooLarge { rows, cols });
    }
    let mut grid = vec![vec![String::from("0"); cols as usize]; rows as usize];
    for (k, m) in p {
        grid[k.coords()[0] as usize][k.coords()[1] as usize] = m.to_string();
    }
    let mut out = String::from("[");
    for (r, row) in grid.iter().enumerate() {
        if r > 0 {
            out.push(',');
        }
        let _ = write!(out, "[{}]", row.join(","));
    }
    out.push(']');
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::ExprKind;
    use crate::parser::parse;

    fn ps(comps: &[([u64; 2], u32)]) -> Polymset {
        Polymset::from_components(2, comps.iter().copied()).unwrap()
    }

    #[test]
    fn matrix_form() {
        let p = ps(&[([0, 0], 1), ([1, 1], 2)]);
        assert_eq!(render_polymset(&p, Style::Matrix).unwrap(), "[[1,0],[0,2]]");
        let q = ps(&[([0, 2], 4)]);
        assert_eq!(render_polymset(&q, Style::Matrix).unwrap(), "[[0,0,4]]");
        assert_eq!(
            render_polymset(&Polymset::empty(2).unwrap(), Style::Matrix).unwrap(),
            "[]"
        );
    }

    #[test]
    fn sparse_form() {
        assert_eq!(
            render_polymset(&Polymset::empty(2).unwrap(), Style::Sparse).unwrap(),
            "{dim=2}"
        );
    }

    #[test]
    fn matrix_needs_two_dimensions() {
        let p = Polymset::from_components(3, [([0, 0, 0], 1u32)]).unwrap();
        assert_eq!(
            render_polymset(&p, Style::Matrix),
            Err(RenderError::UnsupportedStyle(3))
        );
        let far = ps(&[([0, 0], 1)]);
        let far =
            polymset::semiring::shift(&far, &polymset::MultiIndex::try_from([4096, 4096]).unwrap())
                .unwrap();
        assert!(matches!(
            render_polymset(&far, Style::Matrix),
            Err(RenderError::TooLarge { .. })
        ));
    }

    #[test]
    fn both_styles_round_trip() {
        let p = ps(&[([0, 3], 7), ([2, 1], 1), ([2, 0], 12)]);
        for style in [Style::Sparse, Style::Matrix] {
            let text = render_polymset(&p, style).unwrap();
            assert_eq!(parse(&text).unwrap().kind, ExprKind::Literal(p.clone()));
        }
    }
}
