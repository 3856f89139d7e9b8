use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A word in the generators: `k > 0` is generator `k`, `-k` its inverse (1-based).
pub type Word = Vec<i32>;

/// Finite presentation `<g_1..g_n | r_1..r_k>`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Presentation {
    generator_count: usize,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generator_count: usize, relators: Vec<Word>) -> Result<Self> {
        if generator_count == 0 {
            return Err(Error::InvalidPresentation("at least one generator is required".into()));
        }
        for (r, word) in relators.iter().enumerate() {
            for &letter in word {
                let idx = letter.unsigned_abs() as usize;
                if letter == 0 || idx > generator_count {
                    return Err(Error::InvalidPresentation(format!(
                        "relator {} uses letter {letter}, outside [1, {generator_count}]",
                        r + 1
                    )));
                }
            }
        }
        Ok(Presentation {
            generator_count,
            relators,
        })
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Relator exponent-sum matrix: one row per relator, one column per generator.
    pub fn exponent_matrix(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|w| {
                let mut row = vec![0i64; self.generator_count];
                for &letter in w {
                    row[letter.unsigned_abs() as usize - 1] += letter.signum() as i64;
                }
                row
            })
            .collect()
    }
}

/// Freely and cyclically reduce a word.
pub fn cyclically_reduce(word: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(word.len());
    for &letter in word {
        if out.last() == Some(&-letter) {
            out.pop();
        } else {
            out.push(letter);
        }
    }
    let mut lo = 0;
    let mut hi = out.len();
    while hi - lo >= 2 && out[lo] == -out[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    out[lo..hi].to_vec()
}

/// The test group Γ.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GammaGroup {
    /// Free abelian group of rank ℓ.
    ZPow(usize),
    /// Free group of rank ℓ.
    Free(usize),
    Presented(Presentation),
}

impl GammaGroup {
    pub fn zpow(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidParameter("Z^l requires l >= 1".into()));
        }
        Ok(GammaGroup::ZPow(rank))
    }

    pub fn free(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidParameter("F_l requires l >= 1".into()));
        }
        Ok(GammaGroup::Free(rank))
    }

    pub fn presented(generator_count: usize, relators: Vec<Word>) -> Result<Self> {
        Presentation::new(generator_count, relators).map(GammaGroup::Presented)
    }

    /// `<a | a^m>`.
    pub fn cyclic(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter("Z/m requires m >= 1".into()));
        }
        Self::presented(1, vec![vec![1; m]])
    }

    pub fn generator_count(&self) -> usize {
        match self {
            GammaGroup::ZPow(l) | GammaGroup::Free(l) => *l,
            GammaGroup::Presented(p) => p.generator_count(),
        }
    }

    pub fn to_presentation(&self) -> Presentation {
        match self {
            GammaGroup::ZPow(l) => {
                let mut relators = Vec::new();
                for i in 1..=*l as i32 {
                    for j in (i + 1)..=*l as i32 {
                        relators.push(vec![i, j, -i, -j]);
                    }
                }
                Presentation {
                    generator_count: *l,
                    relators,
                }
            }
            GammaGroup::Free(l) => Presentation {
                generator_count: *l,
                relators: Vec::new(),
            },
            GammaGroup::Presented(p) => p.clone(),
        }
    }

    /// Canonical form: recognizes free and free abelian presentations and
    /// rewrites `F_1` as `Z^1`.
    pub fn normalized(&self) -> GammaGroup {
        match self {
            GammaGroup::Free(1) => GammaGroup::ZPow(1),
            GammaGroup::ZPow(_) | GammaGroup::Free(_) => self.clone(),
            GammaGroup::Presented(p) => {
                let n = p.generator_count();
                let reduced: Vec<Word> = p
                    .relators()
                    .iter()
                    .map(|w| cyclically_reduce(w))
                    .filter(|w| !w.is_empty())
                    .collect();
                if reduced.is_empty() {
                    return GammaGroup::Free(n).normalized();
                }
                let mut pairs = BTreeSet::new();
                for w in &reduced {
                    match commutator_pair(w) {
                        Some(pair) => {
                            pairs.insert(pair);
                        }
                        None => return self.clone(),
                    }
                }
                if pairs.len() == n * (n - 1) / 2 {
                    GammaGroup::ZPow(n)
                } else {
                    self.clone()
                }
            }
        }
    }

    /// `Some((ℓ, family))` when Γ is (normalizes to) `Z^ℓ` or `F_ℓ`.
    pub fn standard_family(&self) -> Option<(u32, GammaFamily)> {
        match self.normalized() {
            GammaGroup::ZPow(l) => Some((l as u32, GammaFamily::FreeAbelian)),
            GammaGroup::Free(l) => Some((l as u32, GammaFamily::Free)),
            GammaGroup::Presented(_) => None,
        }
    }
}

/// Unordered generator pair `{i, j}` if `w` is a cyclically reduced commutator `x y x⁻¹ y⁻¹`.
fn commutator_pair(w: &[i32]) -> Option<(u32, u32)> {
    if w.len() != 4 || w[2] != -w[0] || w[3] != -w[1] {
        return None;
    }
    let (a, b) = (w[0].unsigned_abs(), w[1].unsigned_abs());
    if a == b {
        return None;
    }
    Some((a.min(b), a.max(b)))
}

/// The two families with closed-form values: free abelian `Z^ℓ` and free `F_ℓ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GammaFamily {
    FreeAbelian,
    Free,
}

impl GammaFamily {
    pub fn group(self, rank: u32) -> Result<GammaGroup> {
        match self {
            GammaFamily::FreeAbelian => GammaGroup::zpow(rank as usize),
            GammaFamily::Free => GammaGroup::free(rank as usize),
        }
    }
}

impl fmt::Display for GammaFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GammaFamily::FreeAbelian => "Z",
            GammaFamily::Free => "F",
        })
    }
}
