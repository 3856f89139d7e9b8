//! Textual forms for Γ and integer lists used by the command line and demo.
//!
//! ```text
//! Z | Z^<l> | F<l> | fp:<gens>|<relators>
//! ```
//! `gens` is a comma list of distinct lowercase letters; relators are
//! comma-separated words over them, uppercase letters denoting inverses.
//! Example: `fp:a,b|aa,bb,abab`.

use crate::error::{Error, Result};
use crate::groups::GammaGroup;

pub fn parse_gamma(s: &str) -> Result<GammaGroup> {
    let s = s.trim();
    let rank = |digits: &str| -> Result<usize> {
        let l: usize = digits.parse().map_err(|_| Error::Parse(format!("bad rank in {s:?}")))?;
        if l == 0 {
            return Err(Error::Parse(format!("rank must be positive in {s:?}")));
        }
        Ok(l)
    };
    if s == "Z" {
        return Ok(GammaGroup::ZPow(1));
    }
    if let Some(rest) = s.strip_prefix("Z^") {
        return Ok(GammaGroup::ZPow(rank(rest)?));
    }
    if let Some(rest) = s.strip_prefix("fp:") {
        return parse_presentation(rest);
    }
    if let Some(rest) = s.strip_prefix('F') {
        return Ok(GammaGroup::Free(rank(rest)?));
    }
    Err(Error::Parse(format!(
        "unrecognized group {s:?}; expected Z, Z^l, Fl or fp:gens|relators"
    )))
}

fn parse_presentation(body: &str) -> Result<GammaGroup> {
    let (gens, rels) = body.split_once('|').unwrap_or((body, ""));
    let mut names: Vec<char> = Vec::new();
    for g in gens.split(',') {
        let mut chars = g.trim().chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) if c.is_ascii_lowercase() => {
                if names.contains(&c) {
                    return Err(Error::Parse(format!("generator {c} listed twice")));
                }
                names.push(c);
            }
            _ => return Err(Error::Parse(format!("bad generator {g:?}"))),
        }
    }
    let mut relators = Vec::new();
    if !rels.trim().is_empty() {
        for word in rels.split(',') {
            let word = word.trim();
            if word.is_empty() {
                return Err(Error::Parse("empty relator".into()));
            }
            let letters = word
                .chars()
                .map(|c| {
                    let lower = c.to_ascii_lowercase();
                    let idx = names
                        .iter()
                        .position(|&n| n == lower)
                        .ok_or_else(|| Error::Parse(format!("unknown letter {c:?} in {word:?}")))?;
                    let k = idx as i32 + 1;
                    Ok(if c.is_ascii_uppercase() { -k } else { k })
                })
                .collect::<Result<Vec<i32>>>()?;
            relators.push(letters);
        }
    }
    GammaGroup::presented(names.len(), relators).map_err(|e| Error::Parse(e.to_string()))
}

fn letter(index: i32) -> String {
    let k = index.unsigned_abs() as usize - 1;
    if k < 26 {
        let c = (b'a' + k as u8) as char;
        if index < 0 {
            c.to_ascii_uppercase().to_string()
        } else {
            c.to_string()
        }
    } else if index < 0 {
        format!("g{}^-1", k + 1)
    } else {
        format!("g{}", k + 1)
    }
}

pub fn format_gamma(gamma: &GammaGroup) -> String {
    match gamma {
        GammaGroup::ZPow(1) => "Z".into(),
        GammaGroup::ZPow(l) => format!("Z^{l}"),
        GammaGroup::Free(l) => format!("F{l}"),
        GammaGroup::Presented(p) => {
            let gens: Vec<String> = (1..=p.generator_count() as i32).map(letter).collect();
            let rels: Vec<String> = p
                .relators()
                .iter()
                .map(|w| w.iter().map(|&l| letter(l)).collect())
                .collect();
            format!("fp:{}|{}", gens.join(","), rels.join(","))
        }
    }
}

/// Comma-separated signed integers; the empty string is the empty list.
pub fn parse_int_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<T>()
                .map_err(|_| Error::Parse(format!("not an integer: {t:?}")))
        })
        .collect()
}
