use crate::error::{Error, Result};

/// Table groups above this order skip the O(n^3) associativity check.
pub const VERIFY_ORDER_LIMIT: usize = 256;

/// A finite group given by its multiplication table. Elements are `0..order`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Build from a full table `table[a][b] = a·b`, checking the group axioms.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::InvalidGroupTable("empty table".into()));
        }
        if let Some(row) = table.iter().position(|r| r.len() != order) {
            return Err(Error::InvalidGroupTable(format!("row {row} has wrong length")));
        }
        if table.iter().flatten().any(|&x| x >= order) {
            return Err(Error::InvalidGroupTable("entry out of range".into()));
        }
        let mul: Vec<usize> = table.into_iter().flatten().collect();
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| mul[e * order + a] == a && mul[a * order + e] == a))
            .ok_or_else(|| Error::InvalidGroupTable("no identity element".into()))?;
        let mut inverse = vec![0; order];
        for a in 0..order {
            inverse[a] = (0..order)
                .find(|&b| mul[a * order + b] == identity && mul[b * order + a] == identity)
                .ok_or_else(|| Error::InvalidGroupTable(format!("element {a} has no inverse")))?;
        }
        let group = FiniteGroup {
            order,
            mul,
            identity,
            inverse,
        };
        if order <= VERIFY_ORDER_LIMIT {
            group.check_associative()?;
        }
        Ok(group)
    }

    fn check_associative(&self) -> Result<()> {
        for a in 0..self.order {
            for b in 0..self.order {
                let ab = self.mul(a, b);
                for c in 0..self.order {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::InvalidGroupTable(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
                    }
                }
            }
        }
        Ok(())
    }

    /// `Z/mZ`, element `k` is the residue `k`.
    pub fn cyclic(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter("cyclic group order must be >= 1".into()));
        }
        let mul = (0..m * m).map(|i| (i / m + i % m) % m).collect();
        let inverse = (0..m).map(|k| (m - k) % m).collect();
        Ok(FiniteGroup {
            order: m,
            mul,
            identity: 0,
            inverse,
        })
    }

    /// Dihedral group `D_{2m} = <r, s | r^m, s^2, (rs)^2>` of order `2m`.
    ///
    /// Element `k < m` is the rotation `r^k`; element `m + k` is the reflection `s·r^k`.
    pub fn dihedral(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter("dihedral index must be >= 1".into()));
        }
        let n = 2 * m;
        let split = |x: usize| (x % m, x / m);
        let mut mul = vec![0; n * n];
        for a in 0..n {
            let (ka, fa) = split(a);
            for b in 0..n {
                let (kb, fb) = split(b);
                // (s^fa r^ka)(s^fb r^kb) = s^(fa+fb) r^(±ka + kb)
                let k = (if fb == 0 { ka + kb } else { m - ka + kb }) % m;
                mul[a * n + b] = ((fa + fb) % 2) * m + k;
            }
        }
        let inverse = (0..n)
            .map(|x| {
                let (k, f) = split(x);
                if f == 0 {
                    (m - k) % m
                } else {
                    x
                }
            })
            .collect();
        Ok(FiniteGroup {
            order: n,
            mul,
            identity: 0,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g·x·g⁻¹`.
    #[inline]
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inverse[g])
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&z| (0..self.order).all(|g| self.commute(z, g)))
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.center().len() == self.order
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Evaluate a word given images of the generators.
    pub fn evaluate(&self, word: &[i32], images: &[usize]) -> usize {
        word.iter().fold(self.identity, |acc, &letter| {
            let g = images[letter.unsigned_abs() as usize - 1];
            let g = if letter > 0 { g } else { self.inverse[g] };
            self.mul(acc, g)
        })
    }

    /// A small generating set found greedily.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut reached = vec![false; self.order];
        reached[self.identity] = true;
        let mut elements = vec![self.identity];
        for candidate in 0..self.order {
            if reached[candidate] {
                continue;
            }
            gens.push(candidate);
            // closure of the subgroup generated so far
            let mut frontier = elements.clone();
            while let Some(x) = frontier.pop() {
                for &g in &gens {
                    let y = self.mul(x, g);
                    if !reached[y] {
                        reached[y] = true;
                        elements.push(y);
                        frontier.push(y);
                    }
                }
            }
        }
        gens
    }
}
