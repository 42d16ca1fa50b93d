//! Numerical semigroups: membership, gaps, Frobenius number and symmetry.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// A numerical semigroup `S = <g_1, ..., g_k>` with `gcd = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct NumericalSemigroup {
    generators: Vec<u32>,
    frobenius: i64,
    conductor: u32,
    gaps: Vec<u32>,
    /// `membership[n]` for `0 <= n <= conductor`.
    membership: Vec<bool>,
}

impl NumericalSemigroup {
    pub fn new(generators: &[u32]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if generators.contains(&0) {
            return Err(Error::Unsupported("semigroup generators must be positive".into()));
        }
        let g = generators.iter().fold(0u64, |acc, &x| acc.gcd(&(x as u64)));
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }
        let mut gens: Vec<u32> = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();

        let max = *gens.last().unwrap() as usize;
        // the Frobenius number is below max^2
        let bound = (max * max).max(2);
        let mut table = vec![false; bound + 1];
        table[0] = true;
        for n in 1..=bound {
            table[n] = gens.iter().any(|&g| g as usize <= n && table[n - g as usize]);
        }
        let frobenius = table.iter().rposition(|&b| !b).map_or(-1, |p| p as i64);
        let conductor = (frobenius + 1) as u32;
        let gaps: Vec<u32> = (1..conductor).filter(|&n| !table[n as usize]).collect();
        let membership = table[..=conductor as usize].to_vec();

        // drop redundant generators
        let minimal: Vec<u32> = gens
            .iter()
            .copied()
            .filter(|&g| {
                let others: Vec<u32> = gens.iter().copied().filter(|&h| h < g).collect();
                !representable(g, &others)
            })
            .collect();

        Ok(NumericalSemigroup {
            generators: minimal,
            frobenius,
            conductor,
            gaps,
            membership,
        })
    }

    /// Minimal generators, ascending.
    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    /// Multiplicity: the least positive element.
    pub fn min_generator(&self) -> u32 {
        self.generators[0]
    }

    pub fn max_generator(&self) -> u32 {
        *self.generators.last().unwrap()
    }

    pub fn contains(&self, n: u32) -> bool {
        n >= self.conductor || self.membership[n as usize]
    }

    pub fn contains_i64(&self, n: i64) -> bool {
        n >= 0 && self.contains(n as u32)
    }

    /// Elements of `S` below `bound`, ascending.
    pub fn elements_below(&self, bound: u32) -> impl Iterator<Item = u32> + '_ {
        (0..bound).filter(move |&n| self.contains(n))
    }

    /// Exactly one of `z`, `F - z` lies in `S` for every integer `z`.
    pub fn is_symmetric(&self) -> bool {
        2 * self.gaps.len() as i64 == self.frobenius + 1
    }
}

fn representable(n: u32, gens: &[u32]) -> bool {
    let mut reach = vec![false; n as usize + 1];
    reach[0] = true;
    for m in 1..=n as usize {
        reach[m] = gens.iter().any(|&g| g as usize <= m && reach[m - g as usize]);
    }
    reach[n as usize]
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    /// Closure of the generators under addition, enumerated up to `limit`.
    fn closure(gens: &[u32], limit: u32) -> BTreeSet<u32> {
        let mut set = BTreeSet::from([0u32]);
        let mut frontier = vec![0u32];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = x + g;
                if y <= limit && set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set
    }

    fn oracle_gaps(gens: &[u32]) -> Vec<u32> {
        let m = *gens.iter().max().unwrap();
        let limit = 2 * m * m;
        let set = closure(gens, limit);
        (1..=limit).filter(|n| !set.contains(n)).collect()
    }

    #[test]
    fn oracle_frozen_values() {
        assert_eq!(oracle_gaps(&[4, 9, 10]), vec![1, 2, 3, 5, 6, 7, 11, 15]);
        assert_eq!(oracle_gaps(&[3, 4, 5]), vec![1, 2]);
    }

    #[test]
    fn semigroup_4_9_10() {
        let s = NumericalSemigroup::new(&[4, 9, 10]).unwrap();
        assert_eq!(s.frobenius(), 15);
        assert_eq!(s.conductor(), 16);
        assert_eq!(s.gaps(), &[1, 2, 3, 5, 6, 7, 11, 15]);
        assert!(s.is_symmetric());
    }

    #[test]
    fn full_semigroup() {
        let s = NumericalSemigroup::new(&[1]).unwrap();
        assert_eq!(s.frobenius(), -1);
        assert_eq!(s.conductor(), 0);
        assert!(s.gaps().is_empty());
        assert!(s.contains(0) && s.contains(7));
        assert!(s.is_symmetric());
    }

    #[test]
    fn semigroup_3_4_5() {
        let s = NumericalSemigroup::new(&[3, 4, 5]).unwrap();
        assert_eq!(s.frobenius(), 2);
        assert_eq!(s.gaps(), &[1, 2]);
        assert!(!s.is_symmetric());
    }

    #[test]
    fn corpus_symmetry() {
        let cases: &[(&[u32], bool)] = &[
            (&[4, 9, 10], true),
            (&[3, 7, 11], false),
            (&[3, 4, 5], false),
            (&[5, 6, 9], true),
            (&[4, 5, 6], true),
            (&[5, 6, 7, 8], true),
        ];
        for (gens, sym) in cases {
            let s = NumericalSemigroup::new(gens).unwrap();
            assert_eq!(s.is_symmetric(), *sym, "{s}");
        }
    }

    #[test]
    fn errors() {
        assert_eq!(NumericalSemigroup::new(&[]), Err(Error::EmptyGenerators));
        assert_eq!(NumericalSemigroup::new(&[4, 6]), Err(Error::GcdNotOne(2)));
    }

    #[test]
    fn redundant_generators_dropped() {
        let s = NumericalSemigroup::new(&[3, 6, 7, 11]).unwrap();
        assert_eq!(s.generators(), &[3, 7, 11]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn gens() -> impl Strategy<Value = Vec<u32>> {
            prop::collection::vec(2u32..14, 1..4)
                .prop_filter("gcd 1", |g| g.iter().fold(0u64, |a, &x| a.gcd(&(x as u64))) == 1)
        }

        proptest! {
            #[test]
            fn matches_closure_oracle(g in gens()) {
                let s = NumericalSemigroup::new(&g).unwrap();
                prop_assert_eq!(s.gaps().to_vec(), oracle_gaps(&g));
            }

            #[test]
            fn additively_closed(g in gens()) {
                let s = NumericalSemigroup::new(&g).unwrap();
                let c = s.conductor();
                for a in 0..=c {
                    for b in 0..=c {
                        if s.contains(a) && s.contains(b) {
                            prop_assert!(s.contains(a + b));
                        }
                    }
                }
                prop_assert!(s.frobenius() < 0 || !s.contains(s.frobenius() as u32));
                prop_assert!(2 * s.gaps().len() as i64 > s.frobenius());
            }

            #[test]
            fn symmetry_matches_pairing(g in gens()) {
                let s = NumericalSemigroup::new(&g).unwrap();
                let f = s.frobenius();
                let paired = (0..=f.max(0)).all(|z| s.contains_i64(z) != s.contains_i64(f - z));
                prop_assert_eq!(s.is_symmetric(), f < 0 || paired);
            }
        }
    }
}
