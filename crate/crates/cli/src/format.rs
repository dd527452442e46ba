//! Coloring file format: a small key/value header followed by the color
//! array in canonical order.
//!
//! ```text
//! domain: Dn
//! n: 2
//! r: 2
//! colors: 0 1 0 0 ...
//! ```
//!
//! Canonical orders per domain: `Dn` by `value(x) * 2^n + value(y)`;
//! `alph4`/`alph3` by big-endian digit value; `grid` row-major over sorted
//! A then sorted B; `interval` by `1..=N`; `segments` by endpoint pairs
//! ascending by vertex value. Lines starting with `#` are comments.

use dncube::plane::NumberSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FileDomain {
    Dn(u8),
    Alph4(u8),
    Alph3(u8),
    Grid(NumberSet, NumberSet),
    Interval(u64),
    Segments(u8),
}

impl FileDomain {
    pub fn kind(&self) -> &'static str {
        match self {
            FileDomain::Dn(_) => "Dn",
            FileDomain::Alph4(_) => "alph4",
            FileDomain::Alph3(_) => "alph3",
            FileDomain::Grid(_, _) => "grid",
            FileDomain::Interval(_) => "interval",
            FileDomain::Segments(_) => "segments",
        }
    }

    pub fn size(&self) -> usize {
        match self {
            FileDomain::Dn(n) => 1usize << (2 * *n as u32),
            FileDomain::Alph4(n) => 4usize.pow(*n as u32),
            FileDomain::Alph3(n) => 3usize.pow(*n as u32),
            FileDomain::Grid(a, b) => a.len() * b.len(),
            FileDomain::Interval(n) => *n as usize,
            FileDomain::Segments(n) => {
                let v = 1usize << *n;
                v * (v - 1) / 2
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringFile {
    pub domain: FileDomain,
    pub r: u8,
    pub colors: Vec<u8>,
}

impl ColoringFile {
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut kind = None;
        let mut n = None;
        let mut big_n = None;
        let mut a_set = None;
        let mut b_set = None;
        let mut r = None;
        let mut colors: Option<Vec<u8>> = None;

        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(body) = colors.as_mut() {
                parse_colors(line, body)?;
                continue;
            }
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| format!("expected `key: value`, got {line:?}"))?;
            let value = value.trim();
            match key.trim() {
                "domain" => kind = Some(value.to_string()),
                "n" => n = Some(parse_num::<u8>("n", value)?),
                "N" => big_n = Some(parse_num::<u64>("N", value)?),
                "A" => a_set = Some(parse_set(value)?),
                "B" => b_set = Some(parse_set(value)?),
                "r" => r = Some(parse_num::<u8>("r", value)?),
                "colors" => {
                    let mut body = Vec::new();
                    parse_colors(value, &mut body)?;
                    colors = Some(body);
                }
                other => return Err(format!("unknown header key {other:?}")),
            }
        }

        let kind = kind.ok_or("missing `domain` header")?;
        let need_n = || n.ok_or(format!("domain {kind} needs an `n` header"));
        let domain = match kind.as_str() {
            "Dn" => FileDomain::Dn(need_n()?),
            "alph4" => FileDomain::Alph4(need_n()?),
            "alph3" => FileDomain::Alph3(need_n()?),
            "segments" => FileDomain::Segments(need_n()?),
            "interval" => FileDomain::Interval(big_n.ok_or("domain interval needs `N`")?),
            "grid" => FileDomain::Grid(
                a_set.ok_or("domain grid needs `A`")?,
                b_set.ok_or("domain grid needs `B`")?,
            ),
            other => return Err(format!("unknown domain kind {other:?}")),
        };
        let r = r.ok_or("missing `r` header")?;
        if r == 0 {
            return Err("r must be at least 1".into());
        }
        let colors = colors.ok_or("missing `colors` body")?;
        if colors.len() != domain.size() {
            return Err(format!(
                "body has {} colors, domain {} needs {}",
                colors.len(),
                domain.kind(),
                domain.size()
            ));
        }
        if let Some(&bad) = colors.iter().find(|&&c| c >= r) {
            return Err(format!("color {bad} out of range for r = {r}"));
        }
        Ok(ColoringFile { domain, r, colors })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("domain: {}\n", self.domain.kind()));
        match &self.domain {
            FileDomain::Dn(n)
            | FileDomain::Alph4(n)
            | FileDomain::Alph3(n)
            | FileDomain::Segments(n) => out.push_str(&format!("n: {n}\n")),
            FileDomain::Interval(n) => out.push_str(&format!("N: {n}\n")),
            FileDomain::Grid(a, b) => {
                out.push_str(&format!("A: {}\n", join(a.elements())));
                out.push_str(&format!("B: {}\n", join(b.elements())));
            }
        }
        out.push_str(&format!("r: {}\n", self.r));
        let body: Vec<String> = self.colors.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("colors: {}\n", body.join(" ")));
        out
    }
}

fn join(values: &[i64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn parse_num<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, String> {
    value
        .parse()
        .map_err(|_| format!("bad value {value:?} for `{key}`"))
}

fn parse_set(value: &str) -> Result<NumberSet, String> {
    let elements: Vec<i64> = value
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| format!("bad element {t:?}")))
        .collect::<Result<_, String>>()?;
    NumberSet::new(elements).map_err(|e| e.to_string())
}

fn parse_colors(chunk: &str, body: &mut Vec<u8>) -> Result<(), String> {
    for token in chunk.split_whitespace() {
        body.push(
            token
                .parse()
                .map_err(|_| format!("bad color value {token:?}"))?,
        );
    }
    Ok(())
}
