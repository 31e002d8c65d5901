/// Rounds to 12 significant digits and folds `-0.0` into `0.0`.
pub fn round12(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return if v == 0.0 { 0.0 } else { v };
    }
    let r: f64 = format!("{v:.11e}").parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// CSV/JSON cell text: 12 significant digits, shortest round-trip spelling.
pub fn cell(v: f64) -> String {
    format!("{:?}", round12(v))
}
