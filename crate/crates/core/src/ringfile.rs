//! Line-oriented ring description files.
//!
//! ```text
//! # comment
//! name nc4a
//! additive 2 2
//! mul 1 1 : 1 0
//! mul 1 2 : 1 0
//! mul 2 1 : 0 1
//! mul 2 2 : 0 1
//! ```
//!
//! Generator indices are 1-based and every one of the `m^2` products must be
//! given exactly once.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::ring::{make_ring, RingPresentation};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn numbers(line: usize, words: &[&str]) -> Result<Vec<u32>> {
    words
        .iter()
        .map(|w| w.parse::<u32>().map_err(|_| parse_err(line, format!("expected a number, found {w:?}"))))
        .collect()
}

pub fn parse_ring(text: &str) -> Result<RingPresentation> {
    let mut name: Option<(usize, String)> = None;
    let mut factors: Option<(usize, Vec<u32>)> = None;
    let mut entries: Vec<(usize, usize, usize, Vec<u32>)> = Vec::new();

    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let words: Vec<&str> = content.split_whitespace().collect();
        match words[0] {
            "name" => {
                if let Some((prev, _)) = name {
                    return Err(parse_err(line, format!("duplicate name (first on line {prev})")));
                }
                if words.len() != 2 {
                    return Err(parse_err(line, "expected `name <identifier>`"));
                }
                name = Some((line, words[1].to_string()));
            }
            "additive" => {
                if let Some((prev, _)) = factors {
                    return Err(parse_err(line, format!("duplicate additive line (first on line {prev})")));
                }
                let f = numbers(line, &words[1..])?;
                if f.is_empty() {
                    return Err(parse_err(line, "expected at least one invariant factor"));
                }
                if let Some(d) = f.iter().find(|&&d| d < 2) {
                    return Err(parse_err(line, format!("invariant factor {d} is below 2")));
                }
                factors = Some((line, f));
            }
            "mul" => {
                let colon = words
                    .iter()
                    .position(|&w| w == ":")
                    .ok_or_else(|| parse_err(line, "expected `mul i j : c1 ... cm`"))?;
                if colon != 3 {
                    return Err(parse_err(line, "expected exactly two generator indices before `:`"));
                }
                let ij = numbers(line, &words[1..3])?;
                let coeffs = numbers(line, &words[4..])?;
                entries.push((line, ij[0] as usize, ij[1] as usize, coeffs));
            }
            other => return Err(parse_err(line, format!("unknown directive {other:?}"))),
        }
    }

    let (_, name) = name.ok_or_else(|| parse_err(0, "missing `name` line"))?;
    let (fline, factors) = factors.ok_or_else(|| parse_err(0, "missing `additive` line"))?;
    let m = factors.len();
    let mut tensor: Vec<Vec<Option<(usize, Vec<u32>)>>> = vec![vec![None; m]; m];
    for (line, i, j, coeffs) in entries {
        if i == 0 || j == 0 || i > m || j > m {
            return Err(parse_err(line, format!("generator index out of range 1..={m}")));
        }
        if coeffs.len() != m {
            return Err(parse_err(line, format!("expected {m} coefficients, found {}", coeffs.len())));
        }
        for (t, (&c, &d)) in coeffs.iter().zip(&factors).enumerate() {
            if c >= d {
                return Err(parse_err(line, format!("coefficient {c} at position {} is not below {d}", t + 1)));
            }
        }
        let slot = &mut tensor[i - 1][j - 1];
        if let Some((prev, _)) = slot {
            return Err(parse_err(line, format!("duplicate entry mul {i} {j} (first on line {prev})")));
        }
        *slot = Some((line, coeffs));
    }
    let mut full = Vec::with_capacity(m);
    for (i, row) in tensor.into_iter().enumerate() {
        let mut r = Vec::with_capacity(m);
        for (j, slot) in row.into_iter().enumerate() {
            match slot {
                Some((_, c)) => r.push(c),
                None => return Err(parse_err(fline, format!("missing entry mul {} {}", i + 1, j + 1))),
            }
        }
        full.push(r);
    }
    make_ring(&factors, &full, &name)
}

pub fn read_ring_file(path: &Path) -> Result<RingPresentation> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_ring(&text)
}

pub fn write_ring(ring: &RingPresentation) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "name {}", ring.name());
    let f: Vec<String> = ring.invariant_factors().iter().map(u32::to_string).collect();
    let _ = writeln!(out, "additive {}", f.join(" "));
    let m = ring.rank();
    for i in 0..m {
        for j in 0..m {
            let c: Vec<String> = ring.generator_product(i, j).iter().map(u32::to_string).collect();
            let _ = writeln!(out, "mul {} {} : {}", i + 1, j + 1, c.join(" "));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    const NC4A: &str = "# the order-4 ring\nname nc4a\nadditive 2 2\nmul 1 1 : 1 0\nmul 1 2 : 1 0\nmul 2 1 : 0 1\nmul 2 2 : 0 1\n";

    #[test]
    fn parses_nc4a() {
        let r = parse_ring(NC4A).unwrap();
        assert_eq!(r.name(), "nc4a");
        assert_eq!(r.flat_tensor(), families::nc4a().flat_tensor());
        assert_eq!(parse_ring(&write_ring(&r)).unwrap().flat_tensor(), r.flat_tensor());
    }

    #[test]
    fn rejects_duplicates_and_gaps_with_lines() {
        let dup = NC4A.replace("mul 2 2 : 0 1", "mul 2 1 : 0 1");
        match parse_ring(&dup) {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 7);
                assert!(message.contains("duplicate"), "{message}");
            }
            other => panic!("{other:?}"),
        }
        let missing: String = NC4A.lines().take(6).map(|l| format!("{l}\n")).collect();
        match parse_ring(&missing) {
            Err(Error::Parse { message, .. }) => assert!(message.contains("missing entry mul 2 2")),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_ring("name x\nadditive 2\nmul 1 1 : 5\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(parse_ring("name x\nfoo\n"), Err(Error::Parse { line: 2, .. })));
    }
}
