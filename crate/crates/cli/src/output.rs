//! Output formatting: 15-significant-digit numbers, JSON with controlled
//! float rendering, and RFC-4180-style CSV.

use std::io;

use clap::ValueEnum;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Render a float with 15 significant digits, locale-independent.
///
/// Uses positional notation in the %g range (exponent in [-4, 15)) and
/// scientific notation outside it; trailing zeros are trimmed. Parsing the
/// result and rendering it again reproduces the same string.
pub fn fmt_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if x.is_nan() {
        return "null".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 {
            "1e400".to_string()
        } else {
            "-1e400".to_string()
        };
    }
    let sci = format!("{:.14e}", x);
    let (mant, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("exponent digits");
    let mant = mant.trim_end_matches('0').trim_end_matches('.');
    let (sign, digits) = match mant.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", mant),
    };
    let digits: String = digits.chars().filter(|c| *c != '.').collect();
    if !(-4..15).contains(&exp) {
        let mut m = String::new();
        m.push_str(sign);
        m.push(digits.as_bytes()[0] as char);
        if digits.len() > 1 {
            m.push('.');
            m.push_str(&digits[1..]);
        }
        return format!("{m}e{exp}");
    }
    let mut out = String::from(sign);
    if exp < 0 {
        out.push_str("0.");
        for _ in 0..(-exp - 1) {
            out.push('0');
        }
        out.push_str(&digits);
    } else {
        let point = (exp + 1) as usize;
        if digits.len() <= point {
            out.push_str(&digits);
            for _ in 0..(point - digits.len()) {
                out.push('0');
            }
        } else {
            out.push_str(&digits[..point]);
            out.push('.');
            out.push_str(&digits[point..]);
        }
    }
    out
}

struct SigFigFormatter;

impl serde_json::ser::Formatter for SigFigFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        writer.write_all(fmt_sig(value).as_bytes())
    }
}

/// Serialize to JSON with 15-significant-digit floats, newline-terminated.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, SigFigFormatter);
    value.serialize(&mut ser).expect("in-memory serialization");
    buf.push(b'\n');
    String::from_utf8(buf).expect("serde_json emits UTF-8")
}

/// Quote a CSV field when it contains a comma, quote or newline.
pub fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Assemble a CSV table: header plus rows, each newline-terminated.
pub fn to_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        let quoted: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
        out.push_str(&quoted.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positional_rendering() {
        assert_eq!(fmt_sig(0.0), "0");
        assert_eq!(fmt_sig(2.0), "2");
        assert_eq!(fmt_sig(0.5), "0.5");
        assert_eq!(fmt_sig(-1.465), "-1.465");
        assert_eq!(fmt_sig(1.3169578969248168), "1.31695789692482");
        assert_eq!(fmt_sig(1234.5), "1234.5");
    }

    #[test]
    fn scientific_rendering() {
        assert_eq!(fmt_sig(1.5e-7), "1.5e-7");
        assert_eq!(fmt_sig(-2.5e18), "-2.5e18");
        assert_eq!(fmt_sig(1e15), "1e15");
        assert_eq!(fmt_sig(1e14), "100000000000000");
    }

    #[test]
    fn idempotent_under_reparse() {
        for x in [
            1.3169578969248168,
            1.9248473002384139,
            -0.6425622950915548,
            3.3e-9,
            7.25e22,
            123456.789012345,
        ] {
            let s1 = fmt_sig(x);
            let y: f64 = s1.parse().unwrap();
            assert_eq!(fmt_sig(y), s1, "x = {x}");
        }
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("plain"), "plain");
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    }

    #[test]
    fn json_floats_use_sig_digits() {
        #[derive(Serialize)]
        struct Row {
            v: f64,
        }
        let s = to_json(&Row {
            v: 1.3169578969248168,
        });
        assert_eq!(s, "{\"v\":1.31695789692482}\n");
    }
}
