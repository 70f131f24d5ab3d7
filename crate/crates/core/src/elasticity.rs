//! Elasticity of a semigroup from its ideal, the acceptable-elasticity test
//! and expressions of powers of one generator in terms of the others.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::binomial::{buchberger, Binomial, BinomialIdeal, Monomial, MonomialOrder};
use crate::error::{Error, Result};
use crate::hilbert::{hilbert_basis, HilbertBasisSet};
use crate::lattice::{lattice_equations, lattice_from_ideal, DiophantineSystem, IntegerLattice};
use crate::num::Natural;
use crate::sumset::GeneratorWord;

/// Two factorizations `α`, `β` of one element and the length ratio `Σα/Σβ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactorizationPair {
    pub left: GeneratorWord,
    pub right: GeneratorWord,
    pub ratio: BigRational,
}

impl FactorizationPair {
    /// Splits a Hilbert-basis element of `(A | −A)` into its halves.
    /// `None` when the right half is zero.
    pub fn from_doubled(element: &[u64]) -> Option<Self> {
        let t = element.len() / 2;
        let left = GeneratorWord(element[..t].to_vec());
        let right = GeneratorWord(element[t..].to_vec());
        if right.degree() == 0 {
            return None;
        }
        let ratio = BigRational::new(BigInt::from(left.degree()), BigInt::from(right.degree()));
        Some(Self { left, right, ratio })
    }

    /// `[α..., β...]`.
    pub fn concatenated(&self) -> Vec<u64> {
        self.left.0.iter().chain(&self.right.0).copied().collect()
    }
}

impl Serialize for FactorizationPair {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            left: &'a [u64],
            right: &'a [u64],
            ratio: String,
        }
        Repr {
            left: &self.left.0,
            right: &self.right.0,
            ratio: format_ratio(&self.ratio),
        }
        .serialize(s)
    }
}

/// `p/q`, or `p` when the denominator is one.
pub fn format_ratio(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Equations of the lattice of an ideal.
pub fn ideal_equations<E: Natural>(ideal: &BinomialIdeal<E>) -> Result<DiophantineSystem> {
    let lattice: IntegerLattice = lattice_from_ideal(ideal)?;
    lattice_equations(&lattice)
}

/// True when the lattice meets ℕⁿ only in zero, checked as an empty Hilbert
/// basis of its equations.
pub fn strongly_reduced<E: Natural>(ideal: &BinomialIdeal<E>) -> Result<bool> {
    Ok(system_strongly_reduced(&ideal_equations(ideal)?))
}

pub fn system_strongly_reduced(sys: &DiophantineSystem) -> bool {
    hilbert_basis(sys).is_empty()
}

/// Everything derived from the lattice equations.
#[derive(Clone, Debug)]
pub struct ElasticityData {
    pub equations: DiophantineSystem,
    /// Hilbert basis of `(A | −A)`.
    pub hilbert_basis: HilbertBasisSet,
    pub rho: BigRational,
}

/// Elasticity from the lattice equations: the largest `Σα/Σβ` over the
/// Hilbert basis of `(A | −A)`, and 1 when there is none.
pub fn elasticity_from_system(sys: &DiophantineSystem) -> Result<ElasticityData> {
    if !system_strongly_reduced(sys) {
        return Err(Error::NotStronglyReduced);
    }
    let hb = hilbert_basis(&sys.doubled());
    let rho = hb
        .elements()
        .iter()
        .filter_map(|e| FactorizationPair::from_doubled(e))
        .map(|p| p.ratio)
        .max()
        .unwrap_or_else(BigRational::one)
        .max(BigRational::one());
    Ok(ElasticityData {
        equations: sys.clone(),
        hilbert_basis: hb,
        rho,
    })
}

pub fn elasticity_data<E: Natural>(ideal: &BinomialIdeal<E>) -> Result<ElasticityData> {
    elasticity_from_system(&ideal_equations(ideal)?)
}

pub fn elasticity<E: Natural>(ideal: &BinomialIdeal<E>) -> Result<BigRational> {
    Ok(elasticity_data(ideal)?.rho)
}

/// The Hilbert-basis pairs whose ratio equals `rho`, in basis order.
pub fn elasticity_atoms(hb: &HilbertBasisSet, rho: &BigRational) -> Vec<FactorizationPair> {
    hb.elements()
        .iter()
        .filter_map(|e| FactorizationPair::from_doubled(e))
        .filter(|p| p.ratio == *rho)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcceptableOptions {
    /// Also test sums of at most this many elasticity atoms for membership;
    /// 0 turns the search off.
    pub combination_depth: usize,
}

impl Default for AcceptableOptions {
    fn default() -> Self {
        Self {
            combination_depth: 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Acceptable<E = num_bigint::BigUint> {
    pub acceptable: bool,
    /// A binomial of the ideal whose length ratio is the elasticity; `None`
    /// when the elasticity is 1 or not reached.
    pub witness: Option<Binomial<E>>,
    pub rho: BigRational,
    pub atoms: Vec<FactorizationPair>,
}

/// Whether some element reaches the elasticity. The ideal is restricted to
/// the variables used by the elasticity atoms (lex with the others first,
/// then eliminated) and a binomial with ratio `rho` is searched for;
/// otherwise sums of up to `combination_depth` atoms are tested for
/// membership directly. `hb` must be the Hilbert basis of `(A | −A)` in the
/// ideal's variable order.
pub fn acceptable_elasticity<E: Natural>(
    ideal: &BinomialIdeal<E>,
    hb: &HilbertBasisSet,
    options: &AcceptableOptions,
) -> Result<Acceptable<E>> {
    let n = ideal.nvars();
    if hb.nvars() != 2 * n {
        return Err(Error::ContextMismatch {
            expected: 2 * n,
            found: hb.nvars(),
        });
    }
    if !strongly_reduced(ideal)? {
        return Err(Error::NotStronglyReduced);
    }
    let rho = hb
        .elements()
        .iter()
        .filter_map(|e| FactorizationPair::from_doubled(e))
        .map(|p| p.ratio)
        .max()
        .unwrap_or_else(BigRational::one)
        .max(BigRational::one());
    let atoms = elasticity_atoms(hb, &rho);
    if rho.is_one() {
        return Ok(Acceptable {
            acceptable: true,
            witness: None,
            rho,
            atoms,
        });
    }

    let mut used = vec![false; n];
    for a in &atoms {
        for (i, (&l, &r)) in a.left.0.iter().zip(&a.right.0).enumerate() {
            used[i] |= l > 0 || r > 0;
        }
    }
    let priority: Vec<usize> = (0..n)
        .filter(|&i| !used[i])
        .chain((0..n).filter(|&i| used[i]))
        .collect();
    let order = MonomialOrder::lex(priority)?;
    let eliminated: Vec<Binomial<E>> = buchberger(ideal.generators(), &order)?
        .into_iter()
        .filter(|b| b.supported_on(&used))
        .collect();
    let mut witnesses: Vec<Binomial<E>> = eliminated
        .into_iter()
        .filter(|b| ratio_of(b).is_some_and(|r| r == rho))
        .collect();
    if witnesses.is_empty() {
        let lex = ideal.default_order();
        for combo in combinations(&atoms, options.combination_depth) {
            let u = Monomial::from_u64s(&combo.0);
            let v = Monomial::from_u64s(&combo.1);
            if ideal.contains_pair(&u, &v, &lex)? {
                witnesses.push(Binomial::new(u, v).expect("distinct sides"));
                break;
            }
        }
    }
    witnesses.sort_by_key(graded_key);
    let witness = witnesses.into_iter().next();
    Ok(Acceptable {
        acceptable: witness.is_some(),
        witness,
        rho,
        atoms,
    })
}

/// `deg(larger side) / deg(smaller side)`.
fn ratio_of<E: Natural>(b: &Binomial<E>) -> Option<BigRational> {
    let l = b.lead().degree().to_bigint();
    let t = b.trail().degree().to_bigint();
    let (hi, lo) = if l >= t { (l, t) } else { (t, l) };
    (lo != BigInt::from(0)).then(|| BigRational::new(hi, lo))
}

fn graded_key<E: Natural>(
    b: &Binomial<E>,
) -> (BigInt, std::cmp::Reverse<Vec<E>>, std::cmp::Reverse<Vec<E>>) {
    let d = b.lead().degree().to_bigint() + b.trail().degree().to_bigint();
    (
        d,
        std::cmp::Reverse(b.lead().exponents().to_vec()),
        std::cmp::Reverse(b.trail().exponents().to_vec()),
    )
}

/// Sums of 1..=depth atoms (with repetition), as `(Σα, Σβ)`, smallest first.
fn combinations(atoms: &[FactorizationPair], depth: usize) -> Vec<(Vec<u64>, Vec<u64>)> {
    let mut out = Vec::new();
    let mut stack: Vec<(usize, usize, Vec<u64>, Vec<u64>)> = Vec::new();
    if let Some(first) = atoms.first() {
        let t = first.left.len();
        stack.push((0, 0, vec![0; t], vec![0; t]));
    }
    while let Some((start, used, l, r)) = stack.pop() {
        if used > 0 {
            out.push((l.clone(), r.clone()));
        }
        if used == depth {
            continue;
        }
        for (i, a) in atoms.iter().enumerate().skip(start) {
            let l2 = l.iter().zip(&a.left.0).map(|(x, y)| x + y).collect();
            let r2 = r.iter().zip(&a.right.0).map(|(x, y)| x + y).collect();
            stack.push((i, used + 1, l2, r2));
        }
    }
    out.sort_by_key(|(l, r)| l.iter().chain(r).sum::<u64>());
    out.dedup();
    out
}

/// Normal form of `target^power` under `order`, which must rank every
/// monomial containing `target` above every monomial without it. Succeeds
/// when `target` no longer occurs; the result is the exponent vector of the
/// expression in the other generators.
pub fn express<E: Natural>(
    ideal: &BinomialIdeal<E>,
    target: usize,
    power: u64,
    order: &MonomialOrder,
) -> Result<GeneratorWord> {
    let n = ideal.nvars();
    if target >= n {
        return Err(Error::UnknownVariable(format!("#{target}")));
    }
    let mask: Vec<bool> = (0..n).map(|i| i == target).collect();
    if !order.eliminates(&mask) {
        return Err(Error::NotAnEliminationOrder(
            ideal.context().name(target).to_string(),
        ));
    }
    let nf = ideal.normal_form(&Monomial::var(n, target, E::of_u64(power)), order)?;
    let not_expressible = || Error::NotExpressible {
        target: ideal.context().name(target).to_string(),
        power,
    };
    if !nf.exponents()[target].is_zero() {
        return Err(not_expressible());
    }
    nf.to_u64s().map(GeneratorWord).ok_or_else(not_expressible)
}

/// The closed formula for the reduction of `z2^i` in the five-generator
/// example `{3},{4},{6,12},{7,10,13},{0,3,6,9}`: exponents of
/// `x1, x2, z1, z2, z3`.
pub fn closed_form_check(i: u64) -> Result<GeneratorWord> {
    if i < 3 {
        return Err(Error::InvalidSpec(format!(
            "the formula holds for i >= 3, got {i}"
        )));
    }
    let i = i as i128;
    let x1 = (2 - i).rem_euclid(4);
    let x2 = (i + 1).div_euclid(4) + 2 + (i - 3).rem_euclid(4);
    Ok(GeneratorWord(vec![
        x1 as u64,
        x2 as u64,
        (i - 3) as u64,
        0,
        2,
    ]))
}
