use crate::error::{Error, Result};

/// Membership table for the numerical semigroup `<g_1, .., g_k>` up to a bound.
#[derive(Debug, Clone)]
pub struct SemigroupTable {
    member: Vec<bool>,
}

impl SemigroupTable {
    /// Decides membership for every value in `0..=bound`.
    pub fn new(generators: &[u64], bound: u64) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::invalid("a semigroup needs at least one generator"));
        }
        if generators.contains(&0) {
            return Err(Error::invalid("semigroup generators must be positive"));
        }
        let size = usize::try_from(bound)
            .ok()
            .and_then(|b| b.checked_add(1))
            .filter(|&s| s as u128 <= super::MAX_BOX_POINTS)
            .ok_or(Error::BoxTooLarge(bound as u128 + 1))?;
        let mut member = vec![false; size];
        member[0] = true;
        for s in 1..size {
            member[s] = generators
                .iter()
                .any(|&g| (g as usize) <= s && member[s - g as usize]);
        }
        Ok(SemigroupTable { member })
    }

    pub fn bound(&self) -> u64 {
        self.member.len() as u64 - 1
    }

    /// Membership of `value`; values past the bound are reported as absent.
    pub fn contains(&self, value: u64) -> bool {
        usize::try_from(value)
            .ok()
            .and_then(|v| self.member.get(v).copied())
            .unwrap_or(false)
    }
}

/// Whether `target` is a nonnegative integer combination of `generators`.
pub fn semigroup_contains(generators: &[u64], target: u64) -> Result<bool> {
    Ok(SemigroupTable::new(generators, target)?.contains(target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Enumerates coefficient vectors directly.
    fn brute(generators: &[u64], target: u64) -> bool {
        fn go(gens: &[u64], rest: u64) -> bool {
            match gens.split_first() {
                None => rest == 0,
                Some((&g, tail)) => (0..=rest / g).any(|c| go(tail, rest - c * g)),
            }
        }
        go(generators, target)
    }

    #[test]
    fn examples() {
        assert!(!semigroup_contains(&[21, 14, 6], 43).unwrap());
        assert!(semigroup_contains(&[15, 10, 6], 31).unwrap());
        assert!(brute(&[15, 10, 6], 31));
        for k in 0..20 {
            assert!(semigroup_contains(&[1], k).unwrap());
        }
        assert!(semigroup_contains(&[4, 9], 0).unwrap());
    }

    #[test]
    fn rejects_bad_generators() {
        assert!(semigroup_contains(&[], 3).is_err());
        assert!(semigroup_contains(&[0, 2], 3).is_err());
    }

    proptest! {
        #[test]
        fn matches_brute_force(gens in prop::collection::vec(1u64..30, 1..4), target in 0u64..120) {
            prop_assert_eq!(semigroup_contains(&gens, target).unwrap(), brute(&gens, target));
        }

        #[test]
        fn monotone_and_additive(gens in prop::collection::vec(1u64..20, 1..4), extra in 1u64..20,
                                 a in 0u64..60, b in 0u64..60) {
            let t = SemigroupTable::new(&gens, 120).unwrap();
            let mut bigger = gens.clone();
            bigger.push(extra);
            let tb = SemigroupTable::new(&bigger, 120).unwrap();
            if t.contains(a) {
                prop_assert!(tb.contains(a));
            }
            if t.contains(a) && t.contains(b) {
                prop_assert!(t.contains(a + b));
            }
        }
    }
}
