use std::collections::HashMap;

use num_bigint::BigUint;

use super::finite::FiniteGroup;
use super::presentation::GammaGroup;
use crate::error::{Error, Result};
use crate::euler::EulerValue;

/// Default cap on `|H|^generators` candidate tuples.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// A homomorphism Γ → H recorded as the images of Γ's generators.
pub type HomTuple = Vec<usize>;

pub(crate) fn check_budget(base: usize, exp: usize, budget: u64) -> Result<()> {
    let candidates = num_traits::pow(BigUint::from(base), exp);
    if candidates > BigUint::from(budget) {
        return Err(Error::BudgetExceeded {
            candidates: candidates.to_string(),
            budget,
        });
    }
    Ok(())
}

/// All homomorphisms `Γ → H`, in lexicographic order of image ids.
///
/// Backtracks over generator images and rejects a partial assignment as soon
/// as a relator whose letters are all assigned fails to evaluate to the identity.
pub fn enumerate_homs(gamma: &GammaGroup, h: &FiniteGroup, budget: u64) -> Result<Vec<HomTuple>> {
    let p = gamma.to_presentation();
    let n = p.generator_count();
    check_budget(h.order(), n, budget)?;

    // relators bucketed by the largest generator they mention
    let mut ready: Vec<Vec<&[i32]>> = vec![Vec::new(); n];
    for r in p.relators() {
        if let Some(top) = r.iter().map(|l| l.unsigned_abs() as usize).max() {
            ready[top - 1].push(r);
        }
    }

    let mut out = Vec::new();
    let mut images = vec![h.identity(); n];
    fn descend(depth: usize, h: &FiniteGroup, ready: &[Vec<&[i32]>], images: &mut Vec<usize>, out: &mut Vec<HomTuple>) {
        if depth == images.len() {
            out.push(images.clone());
            return;
        }
        for g in 0..h.order() {
            images[depth] = g;
            if ready[depth].iter().all(|r| h.evaluate(r, images) == h.identity()) {
                descend(depth + 1, h, ready, images, out);
            }
        }
    }
    descend(0, h, &ready, &mut images, &mut out);
    Ok(out)
}

fn validate(h: &FiniteGroup, homs: &[HomTuple]) -> Result<()> {
    let width = homs.first().map_or(0, Vec::len);
    for t in homs {
        if t.len() != width {
            return Err(Error::InvalidParameter("homomorphism tuples of unequal length".into()));
        }
        if let Some(&bad) = t.iter().find(|&&x| x >= h.order()) {
            return Err(Error::InvalidParameter(format!(
                "element id {bad} outside group of order {}",
                h.order()
            )));
        }
    }
    Ok(())
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Number of orbits of `homs` under simultaneous conjugation by `H`.
///
/// Orbits are built explicitly: each tuple is joined with its conjugates by
/// a generating set of `H`. The set must be closed under conjugation.
pub fn conjugation_orbit_count(h: &FiniteGroup, homs: &[HomTuple]) -> Result<EulerValue> {
    validate(h, homs)?;
    let index: HashMap<&[usize], usize> = homs.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
    let gens = h.generators();
    let mut sets = DisjointSets::new(homs.len());
    let mut conj = Vec::new();
    for (i, t) in homs.iter().enumerate() {
        for &g in &gens {
            conj.clear();
            conj.extend(t.iter().map(|&x| h.conjugate(g, x)));
            let j = *index
                .get(conj.as_slice())
                .ok_or_else(|| Error::InvalidParameter("homomorphism set is not closed under conjugation".into()))?;
            sets.union(i, j);
        }
    }
    let roots = (0..homs.len()).filter(|&i| sets.find(i) == i).count();
    Ok(EulerValue::from(roots))
}
