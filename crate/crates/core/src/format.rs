//! Number formatting for reports: 12 significant digits for full precision and
//! a half-up 2-decimal display value.

/// Formats like C's `%.12g`.
pub fn full(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    const DIGITS: i32 = 12;
    let sci = format!("{:.*e}", (DIGITS - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..DIGITS).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (DIGITS - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Two decimals, halves rounded away from zero.
///
/// The value is first rounded to 10 decimals so that binary neighbours of a
/// decimal half (0.7/4 is stored as 0.17499999999999998…) round up as the
/// decimal value would.
pub fn display(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let text = format!("{:.10}", x.abs());
    let (int_part, frac) = text.split_once('.').expect("fixed notation");
    let mut hundredths: u64 = int_part.parse::<u64>().expect("integer part") * 100
        + frac[..2].parse::<u64>().expect("two digits");
    if frac.as_bytes()[2] >= b'5' {
        hundredths += 1;
    }
    let sign = if x < 0.0 && hundredths != 0 { "-" } else { "" };
    format!("{sign}{}.{:02}", hundredths / 100, hundredths % 100)
}
