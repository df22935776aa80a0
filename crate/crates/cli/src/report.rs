//! Tabular output: fixed column sets rendered as CSV or JSON lines.

use serde_json::{Map, Number, Value};

/// Significant digits for floats unless full precision is requested.
pub const SIGNIFICANT_DIGITS: usize = 6;

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
    Bool(bool),
    Empty,
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Empty, Into::into)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Style {
    pub json: bool,
    pub full_precision: bool,
}

/// `%g`-style rendering with `sig` significant digits.
pub fn format_sig(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", sig - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= sig as i32 {
        format!("{}e{exp}", trim_fraction(mantissa))
    } else {
        let decimals = (sig as i32 - 1 - exp) as usize;
        trim_fraction(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn render_float(x: f64, style: Style) -> String {
    if style.full_precision {
        format!("{x:?}")
    } else {
        format_sig(x, SIGNIFICANT_DIGITS)
    }
}

impl Cell {
    fn text(&self, style: Style) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => render_float(*v, style),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self, style: Style) -> Value {
        match self {
            Cell::Int(v) => Value::from(*v),
            Cell::Float(v) => {
                let shown: f64 = render_float(*v, style).parse().unwrap_or(*v);
                Number::from_f64(shown).map_or(Value::Null, Value::Number)
            }
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Bool(b) => Value::from(*b),
            Cell::Empty => Value::Null,
        }
    }
}

/// Rows sharing one column set.
#[derive(Clone, Debug, Default)]
pub struct Report {
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
    /// Free-text lines printed before the table (`# ` prefixed in CSV).
    notes: Vec<String>,
}

impl Report {
    pub fn new(columns: &[&'static str]) -> Self {
        Report {
            columns: columns.to_vec(),
            ..Report::default()
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width");
        self.rows.push(row);
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    pub fn render(&self, style: Style) -> String {
        if style.json {
            self.render_json(style)
        } else {
            self.render_csv(style)
        }
    }

    fn render_csv(&self, style: Style) -> String {
        let mut out = String::new();
        for note in &self.notes {
            out.push_str("# ");
            out.push_str(note);
            out.push('\n');
        }
        push_csv_line(&mut out, self.columns.iter().map(|c| c.to_string()));
        for row in &self.rows {
            push_csv_line(&mut out, row.iter().map(|c| c.text(style)));
        }
        out
    }

    fn render_json(&self, style: Style) -> String {
        let mut out = String::new();
        for note in &self.notes {
            out.push_str(&serde_json::json!({ "note": note }).to_string());
            out.push('\n');
        }
        for row in &self.rows {
            let object: Map<String, Value> = self
                .columns
                .iter()
                .zip(row)
                .map(|(col, cell)| (col.to_string(), cell.json(style)))
                .collect();
            out.push_str(&Value::Object(object).to_string());
            out.push('\n');
        }
        out
    }
}

fn push_csv_line(out: &mut String, fields: impl Iterator<Item = String>) {
    let mut first = true;
    for field in fields {
        if !first {
            out.push(',');
        }
        first = false;
        if field.contains([',', '"', '\n', '\r']) {
            out.push('"');
            out.push_str(&field.replace('"', "\"\""));
            out.push('"');
        } else {
            out.push_str(&field);
        }
    }
    out.push('\n');
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig_formatting() {
        assert_eq!(format_sig(8.690_415_759_823_43, 6), "8.69042");
        assert_eq!(format_sig(841.0, 6), "841");
        assert_eq!(format_sig(0.5, 6), "0.5");
        assert_eq!(format_sig(-3.0, 6), "-3");
        assert_eq!(format_sig(1234567.0, 6), "1.23457e6");
        assert_eq!(format_sig(999999.6, 6), "1e6");
        assert_eq!(format_sig(1.4210854715202004e-14, 6), "1.42109e-14");
        assert_eq!(format_sig(0.0001, 6), "0.0001");
        assert_eq!(format_sig(-0.0, 6), "0");
        assert_eq!(format_sig(785.549_753, 6), "785.55");
    }

    #[test]
    fn csv_quotes_and_notes() {
        let mut r = Report::new(&["a", "b"]);
        r.note("hello");
        r.push(vec![Cell::from("x,y"), Cell::Empty]);
        let style = Style { json: false, full_precision: false };
        assert_eq!(r.render(style), "# hello\na,b\n\"x,y\",\n");
    }

    #[test]
    fn json_keeps_column_order() {
        let mut r = Report::new(&["z", "a"]);
        r.push(vec![Cell::from(1usize), Cell::from(2.5)]);
        let style = Style { json: true, full_precision: false };
        assert_eq!(r.render(style), "{\"z\":1,\"a\":2.5}\n");
    }
}
