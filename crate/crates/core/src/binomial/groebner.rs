//! Buchberger's algorithm for binomial ideals.
//!
//! All coefficients are ±1, so reduction never leaves the set of binomials:
//! reducing `u − v` is reducing `u` and `v` separately as monomials.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::binomial::{s_binomial, Binomial};
use super::monomial::Monomial;
use super::order::MonomialOrder;
use crate::error::{Error, Result};
use crate::num::Natural;

/// Rewrites `m` with `lead → trail` steps until no lead divides it.
/// The result is the unique normal form when `basis` is a Gröbner basis.
pub fn normal_form<E: Natural>(
    m: &Monomial<E>,
    basis: &[Binomial<E>],
    ord: &MonomialOrder,
) -> Monomial<E> {
    debug_assert!(basis.iter().all(|b| b.is_oriented(ord)));
    reduce_with(m, basis.iter())
}

fn reduce_with<'a, E: Natural + 'a, I>(m: &Monomial<E>, basis: I) -> Monomial<E>
where
    I: Iterator<Item = &'a Binomial<E>> + Clone,
{
    let mut current = m.clone();
    'outer: loop {
        for b in basis.clone() {
            if b.lead().divides(&current) {
                current = current.div(b.lead()).expect("divides").mul(b.trail());
                continue 'outer;
            }
        }
        return current;
    }
}

/// Reduces `u − v`; `None` when it reduces to zero.
pub fn reduce_binomial<E: Natural>(
    u: &Monomial<E>,
    v: &Monomial<E>,
    basis: &[Binomial<E>],
    ord: &MonomialOrder,
) -> Option<Binomial<E>> {
    Binomial::oriented(normal_form(u, basis, ord), normal_form(v, basis, ord), ord)
}

/// A critical pair waiting in the queue; the heap pops the smallest lcm.
struct Pair<'a, E> {
    ord: &'a MonomialOrder,
    lcm: Monomial<E>,
    i: usize,
    j: usize,
}

impl<E: Natural> PartialEq for Pair<'_, E> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<E: Natural> Eq for Pair<'_, E> {}

impl<E: Natural> PartialOrd for Pair<'_, E> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<E: Natural> Ord for Pair<'_, E> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ord
            .cmp(&other.lcm, &self.lcm)
            .then_with(|| (other.i, other.j).cmp(&(self.i, self.j)))
    }
}

/// The reduced Gröbner basis of the ideal generated by `gens`, sorted by
/// increasing leading monomial.
///
/// Pairs are handled with the normal selection strategy and the
/// Gebauer–Möller update, which drops pairs covered by the product and
/// chain criteria and retires elements whose lead becomes redundant.
pub fn buchberger<E: Natural>(
    gens: &[Binomial<E>],
    ord: &MonomialOrder,
) -> Result<Vec<Binomial<E>>> {
    for g in gens {
        if g.nvars() != ord.nvars() {
            return Err(Error::ContextMismatch {
                expected: ord.nvars(),
                found: g.nvars(),
            });
        }
    }
    let mut state = State {
        all: Vec::new(),
        active: Vec::new(),
        pairs: BinaryHeap::new(),
        ord,
    };
    for g in gens {
        let g = g.clone().orient(ord);
        if let Some(h) = state.reduce(g.lead(), g.trail()) {
            state.update(h);
        }
    }
    while let Some(Pair { i, j, .. }) = state.pairs.pop() {
        let Some(s) = s_binomial(&state.all[i], &state.all[j], ord) else {
            continue;
        };
        if let Some(h) = state.reduce(s.lead(), s.trail()) {
            state.update(h);
        }
    }
    let basis = state.active.iter().map(|&i| state.all[i].clone()).collect();
    Ok(reduce_basis(basis, ord))
}

struct State<'a, E> {
    all: Vec<Binomial<E>>,
    active: Vec<usize>,
    pairs: BinaryHeap<Pair<'a, E>>,
    ord: &'a MonomialOrder,
}

impl<'a, E: Natural> State<'a, E> {
    fn reduce(&self, u: &Monomial<E>, v: &Monomial<E>) -> Option<Binomial<E>> {
        let basis = self.active.iter().map(|&i| &self.all[i]);
        Binomial::oriented(
            reduce_with(u, basis.clone()),
            reduce_with(v, basis),
            self.ord,
        )
    }

    fn update(&mut self, h: Binomial<E>) {
        let hn = self.all.len();
        let hl = h.lead().clone();
        self.all.push(h);

        // New pairs: keep (h, g) unless another new pair has an lcm dividing
        // it; coprime pairs survive this step only to shadow others.
        let mut candidates: Vec<(usize, Monomial<E>, bool)> = self
            .active
            .iter()
            .map(|&g| {
                let gl = self.all[g].lead();
                (g, hl.lcm(gl), hl.is_coprime(gl))
            })
            .collect();
        let mut kept: Vec<(usize, Monomial<E>, bool)> = Vec::new();
        while let Some(c) = candidates.pop() {
            let shadowed = candidates
                .iter()
                .chain(kept.iter())
                .any(|d| d.1.divides(&c.1));
            if c.2 || !shadowed {
                kept.push(c);
            }
        }

        // Old pairs: drop those whose lcm is divisible by lead(h) strictly.
        let all = &self.all;
        self.pairs.retain(|p| {
            !hl.divides(&p.lcm)
                || all[p.i].lead().lcm(&hl) == p.lcm
                || all[p.j].lead().lcm(&hl) == p.lcm
        });

        for (g, lcm, coprime) in kept {
            if !coprime {
                self.pairs.push(Pair {
                    ord: self.ord,
                    lcm,
                    i: g,
                    j: hn,
                });
            }
        }

        self.active.retain(|&g| !hl.divides(all[g].lead()));
        self.active.push(hn);
    }
}

/// Turns a Gröbner basis into the reduced one: drop elements whose lead is
/// divisible by another lead, then fully reduce every trail.
pub fn reduce_basis<E: Natural>(basis: Vec<Binomial<E>>, ord: &MonomialOrder) -> Vec<Binomial<E>> {
    let mut minimal: Vec<Binomial<E>> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(j, h)| j != i && h.lead().divides(g.lead()) && (h.lead() != g.lead() || j < i));
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<Binomial<E>> = minimal
        .iter()
        .map(|g| {
            let trail = normal_form(g.trail(), &minimal, ord);
            Binomial::new(g.lead().clone(), trail).expect("trail stays below lead")
        })
        .collect();
    reduced.sort_by(|a, b| ord.cmp(a.lead(), b.lead()));
    reduced
}

/// The elements of the reduced Gröbner basis supported on `keep`. With an
/// order that ranks every other variable above `keep`, this is the reduced
/// Gröbner basis of the elimination ideal.
pub fn eliminate<E: Natural>(
    gens: &[Binomial<E>],
    ord: &MonomialOrder,
    keep: &[usize],
) -> Result<Vec<Binomial<E>>> {
    let mut allowed = vec![false; ord.nvars()];
    for &k in keep {
        if k >= ord.nvars() {
            return Err(Error::ContextMismatch {
                expected: ord.nvars(),
                found: k + 1,
            });
        }
        allowed[k] = true;
    }
    let eliminated: Vec<bool> = allowed.iter().map(|a| !a).collect();
    if !ord.eliminates(&eliminated) {
        let names: Vec<String> = (0..ord.nvars())
            .filter(|&i| eliminated[i])
            .map(|i| format!("#{i}"))
            .collect();
        return Err(Error::NotAnEliminationOrder(names.join(", ")));
    }
    let gb = buchberger(gens, ord)?;
    Ok(gb
        .into_iter()
        .filter(|b| b.supported_on(&allowed))
        .collect())
}

/// Checks the reduced-basis conditions; used by tests and debug assertions.
pub fn is_reduced_groebner_basis<E: Natural>(basis: &[Binomial<E>], ord: &MonomialOrder) -> bool {
    let oriented = basis.iter().all(|b| b.is_oriented(ord));
    let s_pairs_vanish = basis.iter().enumerate().all(|(i, f)| {
        basis[i + 1..].iter().all(|g| match s_binomial(f, g, ord) {
            None => true,
            Some(s) => reduce_binomial(s.lead(), s.trail(), basis, ord).is_none(),
        })
    });
    let minimal = basis.iter().enumerate().all(|(i, f)| {
        basis
            .iter()
            .enumerate()
            .all(|(j, g)| i == j || !g.lead().divides(f.lead()))
    });
    let trails_reduced = basis
        .iter()
        .all(|f| basis.iter().all(|g| !g.lead().divides(f.trail())));
    let sorted = basis
        .windows(2)
        .all(|w| ord.cmp(w[0].lead(), w[1].lead()) == Ordering::Less);
    oriented && s_pairs_vanish && minimal && trails_reduced && sorted
}
