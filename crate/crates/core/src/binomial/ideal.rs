use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigUint;

use super::binomial::{format_binomial, Binomial};
use super::groebner::{buchberger, normal_form};
use super::monomial::{Monomial, VariableContext};
use super::order::MonomialOrder;
use crate::error::{Error, Result};
use crate::num::Natural;

/// A binomial ideal: its generators plus a per-order cache of reduced
/// Gröbner bases. The cache is filled idempotently and may be shared across
/// threads.
pub struct BinomialIdeal<E = BigUint> {
    context: VariableContext,
    generators: Vec<Binomial<E>>,
    cache: Mutex<HashMap<MonomialOrder, Arc<Vec<Binomial<E>>>>>,
}

impl<E: Natural> BinomialIdeal<E> {
    pub fn new(context: VariableContext, generators: Vec<Binomial<E>>) -> Result<Self> {
        for g in &generators {
            context.check(g.lead())?;
        }
        Ok(Self {
            context,
            generators,
            cache: Mutex::new(HashMap::new()),
        })
    }

    /// The zero ideal.
    pub fn zero(context: VariableContext) -> Self {
        Self {
            context,
            generators: Vec::new(),
            cache: Mutex::new(HashMap::new()),
        }
    }

    /// Wraps a reduced Gröbner basis already known for `ord`.
    pub fn from_groebner_basis(
        context: VariableContext,
        basis: Vec<Binomial<E>>,
        ord: MonomialOrder,
    ) -> Result<Self> {
        let ideal = Self::new(context, basis.clone())?;
        ideal
            .cache
            .lock()
            .expect("cache lock")
            .insert(ord, Arc::new(basis));
        Ok(ideal)
    }

    pub fn context(&self) -> &VariableContext {
        &self.context
    }

    pub fn generators(&self) -> &[Binomial<E>] {
        &self.generators
    }

    pub fn nvars(&self) -> usize {
        self.context.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Lex in context order.
    pub fn default_order(&self) -> MonomialOrder {
        MonomialOrder::lex_natural(self.nvars())
    }

    pub fn groebner_basis(&self, ord: &MonomialOrder) -> Result<Arc<Vec<Binomial<E>>>> {
        if ord.nvars() != self.nvars() {
            return Err(Error::ContextMismatch {
                expected: self.nvars(),
                found: ord.nvars(),
            });
        }
        if let Some(gb) = self.cache.lock().expect("cache lock").get(ord) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(buchberger(&self.generators, ord)?);
        let mut cache = self.cache.lock().expect("cache lock");
        Ok(cache.entry(ord.clone()).or_insert(gb).clone())
    }

    pub fn normal_form(&self, m: &Monomial<E>, ord: &MonomialOrder) -> Result<Monomial<E>> {
        self.context.check(m)?;
        let gb = self.groebner_basis(ord)?;
        Ok(normal_form(m, &gb, ord))
    }

    /// `X^u − X^v ∈ I`. Equal monomials (the zero binomial) are always members.
    pub fn contains_pair(
        &self,
        u: &Monomial<E>,
        v: &Monomial<E>,
        ord: &MonomialOrder,
    ) -> Result<bool> {
        self.context.check(u)?;
        self.context.check(v)?;
        if u == v {
            return Ok(true);
        }
        let gb = self.groebner_basis(ord)?;
        Ok(normal_form(u, &gb, ord) == normal_form(v, &gb, ord))
    }

    pub fn contains_binomial(&self, f: &Binomial<E>, ord: &MonomialOrder) -> Result<bool> {
        self.contains_pair(f.lead(), f.trail(), ord)
    }

    /// Both ideals generate the same ideal (mutual containment of generators).
    pub fn same_ideal(&self, other: &Self) -> Result<bool> {
        if self.nvars() != other.nvars() {
            return Ok(false);
        }
        let ord = self.default_order();
        for g in &other.generators {
            if !self.contains_binomial(g, &ord)? {
                return Ok(false);
            }
        }
        for g in &self.generators {
            if !other.contains_binomial(g, &ord)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Renames and reorders variables: variable `i` of the result is variable
    /// `perm[i]` of `self`, named `names[i]`.
    pub fn permute_variables(&self, perm: &[usize], names: Vec<String>) -> Result<Self> {
        let mut sorted = perm.to_vec();
        sorted.sort_unstable();
        if sorted != (0..self.nvars()).collect::<Vec<_>>() {
            return Err(Error::InvalidOrder(format!(
                "{perm:?} is not a permutation"
            )));
        }
        let ctx = VariableContext::new(names)?;
        Self::new(
            ctx,
            self.generators.iter().map(|g| g.permuted(perm)).collect(),
        )
    }
}

impl<E: Natural> Clone for BinomialIdeal<E> {
    fn clone(&self) -> Self {
        let cache = self.cache.lock().expect("cache lock").clone();
        Self {
            context: self.context.clone(),
            generators: self.generators.clone(),
            cache: Mutex::new(cache),
        }
    }
}

impl<E: Natural> fmt::Debug for BinomialIdeal<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(
                self.generators
                    .iter()
                    .map(|g| format_binomial(&self.context, g)),
            )
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::binomial::parse_binomial;

    #[test]
    fn membership_and_cache() {
        let ctx = VariableContext::new(["x", "y"]).unwrap();
        let g: Binomial = parse_binomial(&ctx, "x^3 - x*y").unwrap();
        let ideal = BinomialIdeal::new(ctx.clone(), vec![g]).unwrap();
        let ord = ideal.default_order();
        let inside: Binomial = parse_binomial(&ctx, "x^5 - x*y^2").unwrap();
        let outside: Binomial = parse_binomial(&ctx, "x^2 - y").unwrap();
        assert!(ideal.contains_binomial(&inside, &ord).unwrap());
        assert!(!ideal.contains_binomial(&outside, &ord).unwrap());
        let one = Monomial::from_u64s(&[1, 1]);
        assert!(ideal.contains_pair(&one, &one, &ord).unwrap());
        let a = ideal.groebner_basis(&ord).unwrap();
        let b = ideal.groebner_basis(&ord).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        assert!(ideal
            .groebner_basis(&MonomialOrder::lex_natural(3))
            .is_err());
    }

    #[test]
    fn concurrent_fills_agree() {
        let ctx = VariableContext::new(["t", "a", "b", "c"]).unwrap();
        let gens = ["a - t^3", "b - t^5", "c - t^7"]
            .iter()
            .map(|s| parse_binomial(&ctx, s).unwrap())
            .collect();
        let ideal = Arc::new(BinomialIdeal::<u32>::new(ctx, gens).unwrap());
        let ord = MonomialOrder::lex_natural(4);
        let results: Vec<_> = (0..4)
            .map(|_| {
                let ideal = ideal.clone();
                let ord = ord.clone();
                std::thread::spawn(move || ideal.groebner_basis(&ord).unwrap())
            })
            .collect::<Vec<_>>()
            .into_iter()
            .map(|h| h.join().unwrap())
            .collect();
        assert!(results.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn permuting_variables() {
        let ctx = VariableContext::new(["x", "y"]).unwrap();
        let g: Binomial = parse_binomial(&ctx, "x^3 - x*y").unwrap();
        let ideal = BinomialIdeal::new(ctx, vec![g]).unwrap();
        let p = ideal
            .permute_variables(&[1, 0], vec!["y".into(), "x".into()])
            .unwrap();
        assert_eq!(format!("{p:?}"), r#"["x^3 - y*x"]"#);
        assert!(ideal
            .permute_variables(&[0, 0], vec!["a".into(), "b".into()])
            .is_err());
    }
}
