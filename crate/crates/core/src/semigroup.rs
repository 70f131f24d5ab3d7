//! Semigroup ideals of sumset semigroups.
//!
//! Numerical semigroup ideals come from toric elimination. The family of
//! semigroups generated by singletons, shifted grids `{c}+A_{nm}` and pure
//! grids `A_{nm}` (all for one `(k, a, b)`) is handled by [`algorithm1`],
//! which adjoins the pair generator for `{0,ka}`, `{0,kb}`, substitutes the
//! grids and eliminates the auxiliary variables.

use serde::{Deserialize, Serialize};

use crate::binomial::{
    buchberger, Binomial, BinomialIdeal, Monomial, MonomialOrder, VariableContext,
};
use crate::error::{Error, Result};
use crate::num::{gcd_u64, Natural};
use crate::sumset::{
    check_grid_params, grid_set, relations_up_to_degree, FiniteSet, GeneratorWord,
};

/// `{a} + A_{nm}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ShiftedGrid {
    pub a: u64,
    pub n: u64,
    pub m: u64,
}

/// `A_{nm}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PureGrid {
    pub n: u64,
    pub m: u64,
}

/// Generators `{b₁},…,{b_p}, {a₁}+A_{n₁m₁},…, A_{n_t m_t}` sharing one
/// grid shape `(k, a, b)`. Generator order is singletons, shifted grids,
/// pure grids; the ideal's variables are `x1…xp, z1…zt` in that order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SumsetSemigroupSpec {
    #[serde(default)]
    pub singletons: Vec<u64>,
    pub k: u64,
    pub a: u64,
    pub b: u64,
    #[serde(default)]
    pub shifted_grids: Vec<ShiftedGrid>,
    #[serde(default)]
    pub pure_grids: Vec<PureGrid>,
}

impl SumsetSemigroupSpec {
    pub fn validate(&self) -> Result<()> {
        check_grid_params(self.k, self.a, self.b).map_err(|e| Error::InvalidSpec(e.to_string()))?;
        if let Some(i) = self.singletons.iter().position(|&s| s == 0) {
            return Err(Error::InvalidSpec(format!("singleton {} is zero", i + 1)));
        }
        for (i, g) in self.shifted_grids.iter().enumerate() {
            if g.a == 0 {
                return Err(Error::InvalidSpec(format!(
                    "shifted grid {} has offset 0",
                    i + 1
                )));
            }
            if g.n + g.m == 0 {
                return Err(Error::InvalidSpec(format!(
                    "shifted grid {} has n+m = 0",
                    i + 1
                )));
            }
        }
        for (j, g) in self.pure_grids.iter().enumerate() {
            if g.n + g.m == 0 {
                return Err(Error::InvalidSpec(format!(
                    "pure grid {} has n+m = 0",
                    j + 1
                )));
            }
        }
        if self.num_generators() == 0 {
            return Err(Error::InvalidSpec("no generators".into()));
        }
        Ok(())
    }

    pub fn num_singletons(&self) -> usize {
        self.singletons.len()
    }

    pub fn num_grids(&self) -> usize {
        self.shifted_grids.len() + self.pure_grids.len()
    }

    pub fn num_generators(&self) -> usize {
        self.num_singletons() + self.num_grids()
    }

    /// The generating sets, in variable order.
    pub fn generators<T: Natural>(&self) -> Result<Vec<FiniteSet<T>>> {
        self.validate()?;
        let mut out: Vec<FiniteSet<T>> = self
            .singletons
            .iter()
            .map(|&s| FiniteSet::singleton(T::of_u64(s)))
            .collect();
        for g in &self.shifted_grids {
            out.push(grid_set::<T>(g.n, g.m, self.k, self.a, self.b)?.shift(&T::of_u64(g.a)));
        }
        for g in &self.pure_grids {
            out.push(grid_set(g.n, g.m, self.k, self.a, self.b)?);
        }
        Ok(out)
    }

    /// `x1…xp, z1…zt`.
    pub fn variables(&self) -> VariableContext {
        let names = (1..=self.num_singletons())
            .map(|i| format!("x{i}"))
            .chain((1..=self.num_grids()).map(|j| format!("z{j}")));
        VariableContext::new(names).expect("generated names are distinct")
    }
}

/// The kernel of `xᵢ ↦ t^{gensᵢ}` as a reduced Gröbner basis for lex in
/// context order.
pub fn numerical_semigroup_ideal<E: Natural>(
    gens: &[u64],
    ctx: &VariableContext,
) -> Result<BinomialIdeal<E>> {
    if gens.is_empty() {
        return Err(Error::InvalidSpec("no generators".into()));
    }
    if gens.contains(&0) {
        return Err(Error::InvalidSpec(
            "numerical semigroup generators must be positive".into(),
        ));
    }
    if ctx.len() != gens.len() {
        return Err(Error::ContextMismatch {
            expected: gens.len(),
            found: ctx.len(),
        });
    }
    let n = gens.len();
    let order = MonomialOrder::lex_natural(n);
    if n == 1 {
        return BinomialIdeal::from_groebner_basis(ctx.clone(), Vec::new(), order);
    }
    // Variable 0 is t; xᵢ is variable i + 1.
    let toric: Vec<Binomial<E>> = gens
        .iter()
        .enumerate()
        .map(|(i, &g)| {
            let x = Monomial::var(n + 1, i + 1, E::one());
            let t = Monomial::var(n + 1, 0, E::of_u64(g));
            Binomial::new(t, x).expect("distinct monomials")
        })
        .collect();
    let big = MonomialOrder::lex_natural(n + 1);
    let basis = buchberger(&toric, &big)?
        .into_iter()
        .filter(|b| b.lead().exponents()[0].is_zero() && b.trail().exponents()[0].is_zero())
        .map(|b| {
            let keep: Vec<usize> = (1..=n).collect();
            let (l, t) = b.into_parts();
            Binomial::new(l.restrict(&keep), t.restrict(&keep)).expect("distinct monomials")
        })
        .collect();
    BinomialIdeal::from_groebner_basis(ctx.clone(), basis, order)
}

/// `x^{2b−1}y^{a−1} − x^{b−1}y^{2a−1}`, the generator of the ideal of
/// `⟨{0,ka},{0,kb}⟩` in variables `(x, y)`. It does not depend on `k`.
pub fn pair_ideal_generator<E: Natural>(a: u64, b: u64, k: u64) -> Result<Binomial<E>> {
    check_grid_params(k, a, b)?;
    let lead = Monomial::from_u64s(&[2 * b - 1, a - 1]);
    let trail = Monomial::from_u64s(&[b - 1, 2 * a - 1]);
    Ok(Binomial::new(lead, trail).expect("a < b"))
}

/// The sum of the ideal of the numerical semigroup on `singletons`
/// (variables `x1…xp`) and an ideal of the zero-minimum `sets` (variables
/// `y1…yt`). `set_ideal` supplies the second summand in the `y` variables;
/// when absent it is derived for zero or one set (free) and for a pair
/// `{0,c}`, `{0,d}` (the pair generator), and is an error otherwise.
pub fn split_ideal<E: Natural, T: Natural>(
    singletons: &[u64],
    sets: &[FiniteSet<T>],
    set_ideal: Option<Vec<Binomial<E>>>,
) -> Result<BinomialIdeal<E>> {
    if let Some(s) = sets.iter().find(|s| !s.min().is_zero()) {
        return Err(Error::InvalidSpec(format!(
            "set {s} has a positive minimum"
        )));
    }
    let p = singletons.len();
    let t = sets.len();
    let set_ideal = match set_ideal {
        Some(gens) => gens,
        None => derived_set_ideal(sets)?,
    };
    let names = (1..=p)
        .map(|i| format!("x{i}"))
        .chain((1..=t).map(|j| format!("y{j}")));
    let ctx = VariableContext::new(names)?;
    let mut gens = Vec::new();
    if p > 0 {
        let x = numerical_semigroup_ideal::<E>(singletons, &VariableContext::numbered("x", p))?;
        let lift: Vec<usize> = (0..p).collect();
        gens.extend(x.generators().iter().map(|g| embed(g, p + t, &lift)));
    }
    let lift: Vec<usize> = (p..p + t).collect();
    for g in &set_ideal {
        if g.nvars() != t {
            return Err(Error::ContextMismatch {
                expected: t,
                found: g.nvars(),
            });
        }
        gens.push(embed(g, p + t, &lift));
    }
    BinomialIdeal::new(ctx, gens)
}

fn derived_set_ideal<E: Natural, T: Natural>(sets: &[FiniteSet<T>]) -> Result<Vec<Binomial<E>>> {
    match sets {
        [] | [_] => Ok(Vec::new()),
        [s, t] if s.len() == 2 && t.len() == 2 => {
            let to_u64 = |v: &T| v.to_u64().ok_or_else(|| Error::InvalidSpec(format!("{v} is too large")));
            let (c, d) = (to_u64(s.max())?, to_u64(t.max())?);
            let k = gcd_u64(c, d);
            let g = if c < d {
                pair_ideal_generator(c / k, d / k, k)?
            } else if d < c {
                pair_ideal_generator::<E>(d / k, c / k, k)?.permuted(&[1, 0])
            } else {
                Binomial::new(Monomial::from_u64s(&[1, 0]), Monomial::from_u64s(&[0, 1])).expect("distinct")
            };
            Ok(vec![g])
        }
        _ => Err(Error::InvalidSpec(
            "the ideal of the zero-minimum sets is only derived for at most one set or a pair {0,c},{0,d}".into(),
        )),
    }
}

/// Moves variable `i` of `b` to position `lift[i]` in a ring of `nvars`.
fn embed<E: Natural>(b: &Binomial<E>, nvars: usize, lift: &[usize]) -> Binomial<E> {
    let place = |m: &Monomial<E>| {
        let mut exps = vec![E::zero(); nvars];
        for (e, &i) in m.exponents().iter().zip(lift) {
            exps[i] = e.clone();
        }
        Monomial::new(exps)
    };
    Binomial::new(place(b.lead()), place(b.trail())).expect("embedding is injective")
}

/// A binomial list together with the variables and order it lives in.
#[derive(Clone, Debug)]
pub struct Stage<E = num_bigint::BigUint> {
    pub context: VariableContext,
    pub order: MonomialOrder,
    pub binomials: Vec<Binomial<E>>,
}

/// The intermediate objects of [`algorithm1`].
#[derive(Clone, Debug)]
pub struct Provenance<E = num_bigint::BigUint> {
    /// Ideal of the singletons and grid offsets, variables `x1…xp, w1…ws`.
    pub g1: Stage<E>,
    /// `g1` plus the pair generator, variables `x1…xp, w1…ws, x, y`.
    pub g_prime: Stage<E>,
    /// `g_prime` plus the grid substitutions, in the elimination variables
    /// `x, y, w1…ws, x1…xp, z1…zt` ordered by lex.
    pub g2: Stage<E>,
    /// Reduced Gröbner basis of `g2`.
    pub g3: Stage<E>,
}

pub struct IdealResult<E = num_bigint::BigUint> {
    pub ideal: BinomialIdeal<E>,
    pub provenance: Provenance<E>,
}

impl<E: Natural> Clone for IdealResult<E> {
    fn clone(&self) -> Self {
        Self {
            ideal: self.ideal.clone(),
            provenance: self.provenance.clone(),
        }
    }
}

impl<E: Natural> std::fmt::Debug for IdealResult<E> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdealResult")
            .field("ideal", &self.ideal)
            .field("provenance", &self.provenance)
            .finish()
    }
}

/// The ideal of a semigroup in the grid family: a reduced lex Gröbner basis
/// in variables `x1…xp, z1…zt`, plus every intermediate step.
pub fn algorithm1<E: Natural>(spec: &SumsetSemigroupSpec) -> Result<IdealResult<E>> {
    spec.validate()?;
    let p = spec.num_singletons();
    let s = spec.shifted_grids.len();
    let t = spec.num_grids();
    let xs =
        |range: std::ops::Range<usize>| range.map(|i| format!("x{}", i + 1)).collect::<Vec<_>>();
    let ws = (0..s).map(|i| format!("w{}", i + 1)).collect::<Vec<_>>();
    let zs = (0..t).map(|j| format!("z{}", j + 1)).collect::<Vec<_>>();

    // Step 1: the numerical semigroup of singletons and offsets.
    let g1_ctx = VariableContext::new(xs(0..p).into_iter().chain(ws.iter().cloned()))?;
    let g1_gens: Vec<u64> = spec
        .singletons
        .iter()
        .copied()
        .chain(spec.shifted_grids.iter().map(|g| g.a))
        .collect();
    let g1: Vec<Binomial<E>> = if g1_gens.is_empty() {
        Vec::new()
    } else {
        numerical_semigroup_ideal::<E>(&g1_gens, &g1_ctx)?
            .generators()
            .to_vec()
    };
    let g1_stage = Stage {
        context: g1_ctx,
        order: MonomialOrder::lex_natural(p + s),
        binomials: g1.clone(),
    };

    // Step 2: adjoin the pair generator in x, y.
    let gp_ctx = VariableContext::new(
        xs(0..p)
            .into_iter()
            .chain(ws.iter().cloned())
            .chain(["x".to_string(), "y".to_string()]),
    )?;
    let n1 = p + s + 2;
    let mut g_prime: Vec<Binomial<E>> = g1
        .iter()
        .map(|g| embed(g, n1, &(0..p + s).collect::<Vec<_>>()))
        .collect();
    g_prime.push(embed(
        &pair_ideal_generator::<E>(spec.a, spec.b, spec.k)?,
        n1,
        &[p + s, p + s + 1],
    ));
    let gp_stage = Stage {
        context: gp_ctx,
        order: MonomialOrder::lex_natural(n1),
        binomials: g_prime.clone(),
    };

    // Step 3: the elimination ring x, y, w, X, Z under lex in that order.
    let n2 = 2 + s + p + t;
    let big_ctx = VariableContext::new(
        ["x".to_string(), "y".to_string()]
            .into_iter()
            .chain(ws.iter().cloned())
            .chain(xs(0..p))
            .chain(zs.iter().cloned()),
    )?;
    // Position in the elimination ring of each variable of the G′ ring.
    let gp_to_big: Vec<usize> = (0..p)
        .map(|i| 2 + s + i)
        .chain((0..s).map(|i| 2 + i))
        .chain([0, 1])
        .collect();
    let big_order = MonomialOrder::lex_natural(n2);
    let mut g2: Vec<Binomial<E>> = g_prime.iter().map(|g| embed(g, n2, &gp_to_big)).collect();
    let grids = spec
        .shifted_grids
        .iter()
        .enumerate()
        .map(|(i, g)| (Some(i), g.n, g.m))
        .chain(spec.pure_grids.iter().map(|g| (None, g.n, g.m)));
    for (j, (w, n, m)) in grids.enumerate() {
        let z = Monomial::var(n2, 2 + s + p + j, E::one());
        let mut rhs = vec![E::zero(); n2];
        rhs[0] = E::of_u64(n);
        rhs[1] = E::of_u64(m);
        if let Some(i) = w {
            rhs[2 + i] = E::one();
        }
        g2.push(Binomial::new(z, Monomial::new(rhs)).expect("z does not occur on the right"));
    }
    let g2_stage = Stage {
        context: big_ctx.clone(),
        order: big_order.clone(),
        binomials: g2.clone(),
    };

    // Step 4: Gröbner basis and intersection with k[X, Z].
    let g3 = buchberger(&g2, &big_order)?;
    let keep: Vec<usize> = (2 + s..n2).collect();
    let mut allowed = vec![false; n2];
    for &k in &keep {
        allowed[k] = true;
    }
    let output: Vec<Binomial<E>> = g3
        .iter()
        .filter(|b| b.supported_on(&allowed))
        .map(|b| {
            let (l, t) = b.clone().into_parts();
            Binomial::new(l.restrict(&keep), t.restrict(&keep)).expect("distinct monomials")
        })
        .collect();
    let g3_stage = Stage {
        context: big_ctx,
        order: big_order,
        binomials: g3,
    };

    let ideal = BinomialIdeal::from_groebner_basis(
        spec.variables(),
        output,
        MonomialOrder::lex_natural(p + t),
    )?;
    Ok(IdealResult {
        ideal,
        provenance: Provenance {
            g1: g1_stage,
            g_prime: gp_stage,
            g2: g2_stage,
            g3: g3_stage,
        },
    })
}

/// A spec recognized from raw sets, with `source[i]` the index in the raw
/// input of the spec's generator `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recognized {
    pub spec: SumsetSemigroupSpec,
    pub source: Vec<usize>,
}

/// Classifies each raw set as a singleton `{c}`, `c > 0`, or as
/// `{c} + A_{nm}` for the given `(k, a, b)`. When several `(n, m)` give the
/// same grid the one with the largest `n` is chosen.
pub fn recognize_generators<T: Natural>(
    raw: &[FiniteSet<T>],
    k: u64,
    a: u64,
    b: u64,
) -> Result<Recognized> {
    check_grid_params(k, a, b)?;
    let unrecognized = |s: &FiniteSet<T>| Error::Unrecognized {
        set: s.to_string(),
        k,
        a,
        b,
    };
    let mut singletons = Vec::new();
    let mut shifted = Vec::new();
    let mut pure = Vec::new();
    for (idx, set) in raw.iter().enumerate() {
        let (offset, base) = set.normalize();
        let offset = offset.to_u64().ok_or_else(|| unrecognized(set))?;
        if base.is_singleton() {
            if offset == 0 {
                return Err(unrecognized(set));
            }
            singletons.push((idx, offset));
            continue;
        }
        let (n, m) = match_grid(&base, k, a, b).ok_or_else(|| unrecognized(set))?;
        if offset == 0 {
            pure.push((idx, PureGrid { n, m }));
        } else {
            shifted.push((idx, ShiftedGrid { a: offset, n, m }));
        }
    }
    let source = singletons
        .iter()
        .map(|s| s.0)
        .chain(shifted.iter().map(|s| s.0))
        .chain(pure.iter().map(|s| s.0))
        .collect();
    let spec = SumsetSemigroupSpec {
        singletons: singletons.into_iter().map(|s| s.1).collect(),
        k,
        a,
        b,
        shifted_grids: shifted.into_iter().map(|s| s.1).collect(),
        pure_grids: pure.into_iter().map(|s| s.1).collect(),
    };
    Ok(Recognized { spec, source })
}

fn match_grid<T: Natural>(base: &FiniteSet<T>, k: u64, a: u64, b: u64) -> Option<(u64, u64)> {
    let top = base.max().to_u64()?;
    if top % k != 0 {
        return None;
    }
    // max A_{nm} = k(na + mb).
    let top = top / k;
    (0..=top / a).rev().find_map(|n| {
        let rest = top - n * a;
        if !rest.is_multiple_of(b) {
            return None;
        }
        let m = rest / b;
        (n + m > 0 && grid_set::<T>(n, m, k, a, b).ok()? == *base).then_some((n, m))
    })
}

/// Violations found by [`verify_ideal`].
#[derive(Clone, Debug, Default)]
pub struct VerifyReport<E = num_bigint::BigUint> {
    /// Ideal binomials whose two sides evaluate to different sets.
    pub unsound: Vec<Binomial<E>>,
    /// Oracle relations missing from the ideal.
    pub missing: Vec<(GeneratorWord, GeneratorWord)>,
    /// Number of oracle relations checked.
    pub relations_checked: usize,
}

impl<E> VerifyReport<E> {
    pub fn is_clean(&self) -> bool {
        self.unsound.is_empty() && self.missing.is_empty()
    }
}

/// Cross-checks an ideal against the brute-force oracle: every binomial must
/// be a sumset equality, and every relation of degree at most `max_degree`
/// must lie in the ideal.
pub fn verify_ideal<E: Natural, T: Natural>(
    ideal: &BinomialIdeal<E>,
    gens: &[FiniteSet<T>],
    max_degree: u64,
) -> Result<VerifyReport<E>> {
    if ideal.nvars() != gens.len() {
        return Err(Error::ContextMismatch {
            expected: gens.len(),
            found: ideal.nvars(),
        });
    }
    let mut report = VerifyReport {
        unsound: Vec::new(),
        missing: Vec::new(),
        relations_checked: 0,
    };
    for g in ideal.generators() {
        let word = |m: &Monomial<E>| m.to_u64s().map(GeneratorWord);
        let holds = match (word(g.lead()), word(g.trail())) {
            (Some(u), Some(v)) => {
                crate::sumset::eval_word(&u, gens)? == crate::sumset::eval_word(&v, gens)?
            }
            _ => false,
        };
        if !holds {
            report.unsound.push(g.clone());
        }
    }
    let ord = ideal.default_order();
    for (u, v) in relations_up_to_degree(gens, max_degree) {
        report.relations_checked += 1;
        let mu = Monomial::from_u64s(u.exponents());
        let mv = Monomial::from_u64s(v.exponents());
        if !ideal.contains_pair(&mu, &mv, &ord)? {
            report.missing.push((u, v));
        }
    }
    Ok(report)
}
