//! Minimal tabular output: named columns, typed cells, CSV rendering.
//!
//! The CSV dialect is deliberately tiny — comma separated, LF line
//! endings, no quoting — because every cell is numeric, boolean, or empty
//! (infeasible entries render as an empty field). Floats are written with
//! six significant digits in plain decimal notation, the house style for
//! all generated tables, so outputs are stable enough to diff and to pin
//! in golden tests.

/// One table cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Float(f64),
    Int(i64),
    Bool(bool),
    /// Rendered as an empty field; used for infeasible results.
    Empty,
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Float(x)
    }
}

impl From<i64> for Cell {
    fn from(x: i64) -> Self {
        Cell::Int(x)
    }
}

impl From<u32> for Cell {
    fn from(x: u32) -> Self {
        Cell::Int(x as i64)
    }
}

impl From<bool> for Cell {
    fn from(x: bool) -> Self {
        Cell::Bool(x)
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Empty, Cell::Float)
    }
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Float(x) => fmt_sig(*x),
            Cell::Int(x) => x.to_string(),
            Cell::Bool(x) => x.to_string(),
            Cell::Empty => String::new(),
        }
    }
}

/// A rectangular table with a fixed header.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    columns: Vec<String>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    /// Creates an empty table with the given column names.
    pub fn new<S: Into<String>>(columns: Vec<S>) -> Self {
        Table {
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    /// Appends one row; its arity must match the header.
    pub fn push_row(&mut self, cells: Vec<Cell>) {
        assert_eq!(
            cells.len(),
            self.columns.len(),
            "row arity must match the header"
        );
        self.rows.push(cells);
    }

    /// Number of data rows (the header excluded).
    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// Column names in order.
    pub fn columns(&self) -> &[String] {
        &self.columns
    }

    /// Renders the table as CSV: a header line then one line per row,
    /// LF-terminated throughout.
    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(Cell::render).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }
}

/// Formats `x` with six significant digits in plain decimal notation.
///
/// The fractional width follows the decimal magnitude (`0.237430`,
/// `10.0079`, `288.047`); integers beyond six digits print whole, and the
/// width is capped at twelve decimals for subnormal-small values. Zero
/// (either sign) prints as `0.00000`.
pub fn fmt_sig(x: f64) -> String {
    debug_assert!(x.is_finite(), "table cells must be finite, got {x}");
    if x == 0.0 {
        return "0.00000".to_string();
    }
    // Take the decimal exponent from the e-notation formatter rather than
    // log10, which can land an ulp below a power of ten.
    let exp: i32 = {
        let s = format!("{:e}", x.abs());
        s.split('e')
            .nth(1)
            .expect("e-notation always carries an exponent")
            .parse()
            .expect("exponent is an integer")
    };
    let decimals = (5 - exp).clamp(0, 12) as usize;
    format!("{x:.decimals$}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_significant_digits_track_the_magnitude() {
        assert_eq!(fmt_sig(0.0), "0.00000");
        assert_eq!(fmt_sig(-0.0), "0.00000");
        assert_eq!(fmt_sig(1.0), "1.00000");
        assert_eq!(fmt_sig(0.9), "0.900000");
        assert_eq!(fmt_sig(2.0 / 3.0), "0.666667");
        assert_eq!(fmt_sig(0.237429509954), "0.237430");
        assert_eq!(fmt_sig(10.007893), "10.0079");
        assert_eq!(fmt_sig(288.047), "288.047");
        assert_eq!(fmt_sig(150.0), "150.000");
        assert_eq!(fmt_sig(-0.05), "-0.0500000");
        assert_eq!(fmt_sig(5000.0), "5000.00");
    }

    #[test]
    fn magnitude_detection_survives_powers_of_ten() {
        assert_eq!(fmt_sig(1000.0), "1000.00");
        assert_eq!(fmt_sig(0.001), "0.00100000");
        assert_eq!(fmt_sig(1e-9), "0.000000001000");
    }

    #[test]
    fn oversized_integers_print_whole() {
        assert_eq!(fmt_sig(1234567.0), "1234567");
        assert_eq!(fmt_sig(-9876543.0), "-9876543");
    }

    #[test]
    fn csv_renders_header_rows_and_empty_cells() {
        let mut t = Table::new(vec!["layer", "cutoff", "feasible"]);
        t.push_row(vec![Cell::from(5u32), Cell::from(Some(0.9)), Cell::from(true)]);
        t.push_row(vec![Cell::from(150u32), Cell::from(0.0), Cell::from(true)]);
        t.push_row(vec![Cell::from(500u32), Cell::from(None), Cell::from(false)]);
        assert_eq!(
            t.to_csv(),
            "layer,cutoff,feasible\n\
             5,0.900000,true\n\
             150,0.00000,true\n\
             500,,false\n"
        );
        assert_eq!(t.row_count(), 3);
    }

    #[test]
    #[should_panic(expected = "row arity")]
    fn mismatched_row_width_panics() {
        let mut t = Table::new(vec!["a", "b"]);
        t.push_row(vec![Cell::from(1.0)]);
    }
}
