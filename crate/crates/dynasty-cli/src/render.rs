//! Number and CSV rendering. One rule everywhere: dot decimal separator,
//! `inf`/`-inf` for the extended reals, a fixed number of decimals
//! (trailing zeros trimmed) unless full round-trip precision is requested.

/// An extended-real table cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Num(f64),
    PosInf,
    NegInf,
}

impl Cell {
    pub fn render(&self, decimals: usize) -> String {
        match self {
            Cell::Num(v) => fmt_float(*v, decimals),
            Cell::PosInf => "inf".to_string(),
            Cell::NegInf => "-inf".to_string(),
        }
    }
}

/// `decimals = 0` means "shortest string that round-trips".
pub fn fmt_float(v: f64, decimals: usize) -> String {
    if v.is_infinite() {
        return if v > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    if decimals == 0 {
        return format!("{v}");
    }
    let s = format!("{v:.decimals$}");
    if !s.contains('.') {
        return s;
    }
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

/// Join one CSV record. Fields here never contain commas or quotes, so no
/// escaping dialect is needed.
pub fn csv_line(fields: &[String]) -> String {
    fields.join(",")
}
