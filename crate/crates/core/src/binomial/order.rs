//! Monomial orders: lex with a variable priority, block (elimination) orders
//! and integer weight matrices.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::monomial::{Monomial, VariableContext};
use crate::error::{Error, Result};
use crate::linalg;
use crate::num::Natural;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    nvars: usize,
    kind: OrderKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Variables compared in `priority` order, highest first.
    Lex { priority: Vec<usize> },
    /// `front` variables decide first under `front_order` (indexed locally),
    /// ties go to `back` under `back_order`.
    Block {
        front: Vec<usize>,
        front_order: Box<MonomialOrder>,
        back: Vec<usize>,
        back_order: Box<MonomialOrder>,
    },
    /// First nonzero entry of `M(u - v)` decides.
    Matrix { rows: Vec<Vec<i64>> },
}

impl MonomialOrder {
    /// Lex with the given priority (a permutation of `0..nvars`, highest first).
    pub fn lex(priority: Vec<usize>) -> Result<Self> {
        let n = priority.len();
        let mut seen = vec![false; n];
        for &p in &priority {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidOrder(format!(
                    "{priority:?} is not a permutation"
                )));
            }
        }
        Ok(Self {
            nvars: n,
            kind: OrderKind::Lex { priority },
        })
    }

    /// Lex with `x_0 > x_1 > … `.
    pub fn lex_natural(nvars: usize) -> Self {
        Self {
            nvars,
            kind: OrderKind::Lex {
                priority: (0..nvars).collect(),
            },
        }
    }

    /// Lex by variable names, highest first.
    pub fn lex_by_names<S: AsRef<str>>(ctx: &VariableContext, names: &[S]) -> Result<Self> {
        if names.len() != ctx.len() {
            return Err(Error::InvalidOrder(format!(
                "lex order names {} variables, the context has {}",
                names.len(),
                ctx.len()
            )));
        }
        Self::lex(ctx.indices_of(names)?)
    }

    /// Block order; `back` is every variable not in `front`, in increasing index.
    pub fn block(
        nvars: usize,
        front: Vec<usize>,
        front_order: MonomialOrder,
        back_order: MonomialOrder,
    ) -> Result<Self> {
        let mut in_front = vec![false; nvars];
        for &f in &front {
            if f >= nvars || std::mem::replace(&mut in_front[f], true) {
                return Err(Error::InvalidOrder(format!("bad front block {front:?}")));
            }
        }
        let back: Vec<usize> = (0..nvars).filter(|&i| !in_front[i]).collect();
        if front_order.nvars != front.len() || back_order.nvars != back.len() {
            return Err(Error::InvalidOrder(
                "block inner orders have the wrong size".into(),
            ));
        }
        Ok(Self {
            nvars,
            kind: OrderKind::Block {
                front,
                front_order: Box::new(front_order),
                back,
                back_order: Box::new(back_order),
            },
        })
    }

    /// Matrix order. The matrix must have full column rank (so the order is
    /// total) and the first nonzero entry of every column must be positive
    /// (so every variable is above 1 and the order is a well-order).
    pub fn matrix(rows: Vec<Vec<i64>>) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::InvalidOrder("ragged weight matrix".into()));
        }
        if linalg::rank(&linalg::to_bigint_rows(&rows), ncols) != ncols {
            return Err(Error::InvalidOrder(
                "weight matrix does not have full column rank".into(),
            ));
        }
        for c in 0..ncols {
            if let Some(r) = rows.iter().find(|r| r[c] != 0) {
                if r[c] < 0 {
                    return Err(Error::InvalidOrder(format!(
                        "column {c} starts negative; not a well-order"
                    )));
                }
            }
        }
        Ok(Self {
            nvars: ncols,
            kind: OrderKind::Matrix { rows },
        })
    }

    /// Matrix order with `target` strictly heaviest: first row picks out
    /// `target`, second row is total degree in the others, then the other
    /// variables one per row (the last one is implied).
    pub fn heaviest_first(nvars: usize, target: usize) -> Result<Self> {
        if target >= nvars {
            return Err(Error::InvalidOrder(format!(
                "variable index {target} out of range"
            )));
        }
        let unit = |i: usize| (0..nvars).map(|j| i64::from(i == j)).collect::<Vec<_>>();
        let mut rows = vec![unit(target)];
        if nvars > 1 {
            rows.push((0..nvars).map(|j| i64::from(j != target)).collect());
            let others: Vec<usize> = (0..nvars).filter(|&j| j != target).collect();
            for &j in &others[..others.len() - 1] {
                rows.push(unit(j));
            }
        }
        Self::matrix(rows)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    /// Compares two monomials, checking that both live in this order's variables.
    pub fn compare<E: Natural>(&self, u: &Monomial<E>, v: &Monomial<E>) -> Result<Ordering> {
        for m in [u, v] {
            if m.nvars() != self.nvars {
                return Err(Error::ContextMismatch {
                    expected: self.nvars,
                    found: m.nvars(),
                });
            }
        }
        Ok(self.cmp(u, v))
    }

    /// Unchecked comparison; both monomials must have `nvars()` exponents.
    pub fn cmp<E: Natural>(&self, u: &Monomial<E>, v: &Monomial<E>) -> Ordering {
        match &self.kind {
            OrderKind::Lex { priority } => {
                let (a, b) = (u.exponents(), v.exponents());
                for &i in priority {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            OrderKind::Block {
                front,
                front_order,
                back,
                back_order,
            } => front_order
                .cmp(&u.restrict(front), &v.restrict(front))
                .then_with(|| back_order.cmp(&u.restrict(back), &v.restrict(back))),
            OrderKind::Matrix { rows } => matrix_cmp(rows, u, v),
        }
    }

    pub fn greater<E: Natural>(&self, u: &Monomial<E>, v: &Monomial<E>) -> bool {
        self.cmp(u, v) == Ordering::Greater
    }

    /// True when every monomial involving an `eliminated` variable is above
    /// every monomial in the remaining variables.
    pub fn eliminates(&self, eliminated: &[bool]) -> bool {
        assert_eq!(eliminated.len(), self.nvars);
        if !eliminated.contains(&true) {
            return true;
        }
        match &self.kind {
            OrderKind::Lex { priority } => {
                let first_kept = priority
                    .iter()
                    .position(|&i| !eliminated[i])
                    .unwrap_or(priority.len());
                priority[first_kept..].iter().all(|&i| !eliminated[i])
            }
            OrderKind::Block {
                front,
                front_order,
                back,
                back_order,
            } => {
                let back_elim: Vec<bool> = back.iter().map(|&i| eliminated[i]).collect();
                if back_elim.contains(&true) {
                    front.iter().all(|&i| eliminated[i]) && back_order.eliminates(&back_elim)
                } else {
                    let front_elim: Vec<bool> = front.iter().map(|&i| eliminated[i]).collect();
                    front_order.eliminates(&front_elim)
                }
            }
            OrderKind::Matrix { rows } => {
                // Sufficient condition: a prefix of rows vanishing on kept
                // columns, nonnegative on eliminated ones, covering each of them.
                let mut covered = vec![false; self.nvars];
                for row in rows {
                    let valid =
                        row.iter()
                            .enumerate()
                            .all(|(j, &w)| if eliminated[j] { w >= 0 } else { w == 0 });
                    if !valid {
                        break;
                    }
                    for (j, &w) in row.iter().enumerate() {
                        covered[j] |= w > 0;
                    }
                }
                (0..self.nvars).all(|j| !eliminated[j] || covered[j])
            }
        }
    }

    pub fn to_spec(&self, ctx: &VariableContext) -> OrderSpec {
        self.to_spec_local(
            &ctx.names().iter().map(String::as_str).collect::<Vec<_>>(),
            true,
        )
    }

    fn to_spec_local(&self, names: &[&str], top: bool) -> OrderSpec {
        match &self.kind {
            OrderKind::Lex { priority } => OrderSpec::Lex {
                vars: priority.iter().map(|&i| names[i].to_string()).collect(),
            },
            OrderKind::Matrix { rows } => OrderSpec::Matrix {
                rows: rows.clone(),
                vars: if top {
                    None
                } else {
                    Some(names.iter().map(|s| s.to_string()).collect())
                },
            },
            OrderKind::Block {
                front,
                front_order,
                back,
                back_order,
            } => {
                let fnames: Vec<&str> = front.iter().map(|&i| names[i]).collect();
                let bnames: Vec<&str> = back.iter().map(|&i| names[i]).collect();
                OrderSpec::Block {
                    front: Box::new(front_order.to_spec_local(&fnames, false)),
                    back: Box::new(back_order.to_spec_local(&bnames, false)),
                }
            }
        }
    }

    pub fn from_spec(ctx: &VariableContext, spec: &OrderSpec) -> Result<Self> {
        let all: Vec<usize> = (0..ctx.len()).collect();
        Self::from_spec_over(ctx, spec, &all).map(|(o, _)| o)
    }

    /// Builds an order over the context variables `scope` (global indices).
    /// Returns the order and the global indices it ranges over, in local order.
    fn from_spec_over(
        ctx: &VariableContext,
        spec: &OrderSpec,
        scope: &[usize],
    ) -> Result<(Self, Vec<usize>)> {
        let local = |globals: &[usize]| -> Result<Vec<usize>> {
            globals
                .iter()
                .map(|g| {
                    scope.iter().position(|s| s == g).ok_or_else(|| {
                        Error::InvalidOrder(format!(
                            "variable `{}` is outside its block",
                            ctx.name(*g)
                        ))
                    })
                })
                .collect()
        };
        match spec {
            OrderSpec::Lex { vars } => {
                let globals = ctx.indices_of(vars)?;
                if globals.len() != scope.len() {
                    return Err(Error::InvalidOrder(format!(
                        "lex order must name all {} variables",
                        scope.len()
                    )));
                }
                let priority = local(&globals)?;
                Ok((Self::lex(priority)?, scope.to_vec()))
            }
            OrderSpec::Matrix { rows, vars } => {
                let globals = match vars {
                    Some(v) => ctx.indices_of(v)?,
                    None => scope.to_vec(),
                };
                if globals.len() != scope.len() || rows.first().map_or(0, Vec::len) != scope.len() {
                    return Err(Error::InvalidOrder(format!(
                        "matrix order must have {} columns",
                        scope.len()
                    )));
                }
                let perm = local(&globals)?;
                // Column j of the spec refers to variable globals[j]; reorder to scope order.
                let reordered: Vec<Vec<i64>> = rows
                    .iter()
                    .map(|r| {
                        let mut out = vec![0; r.len()];
                        for (j, &p) in perm.iter().enumerate() {
                            out[p] = r[j];
                        }
                        out
                    })
                    .collect();
                Ok((Self::matrix(reordered)?, scope.to_vec()))
            }
            OrderSpec::Block { front, back } => {
                let front_vars = spec_vars(ctx, front)?;
                let back_vars: Vec<usize> = scope
                    .iter()
                    .copied()
                    .filter(|g| !front_vars.contains(g))
                    .collect();
                let (front_order, front_scope) = Self::from_spec_over(ctx, front, &front_vars)?;
                let (back_order, back_scope) = Self::from_spec_over(ctx, back, &back_vars)?;
                debug_assert_eq!(back_scope, back_vars);
                let front_local = local(&front_scope)?;
                let order = Self::block(scope.len(), front_local, front_order, back_order)?;
                Ok((order, scope.to_vec()))
            }
        }
    }
}

fn spec_vars(ctx: &VariableContext, spec: &OrderSpec) -> Result<Vec<usize>> {
    match spec {
        OrderSpec::Lex { vars } => {
            let mut v = ctx.indices_of(vars)?;
            v.sort_unstable();
            Ok(v)
        }
        OrderSpec::Matrix {
            vars: Some(vars), ..
        } => {
            let mut v = ctx.indices_of(vars)?;
            v.sort_unstable();
            Ok(v)
        }
        OrderSpec::Matrix { vars: None, .. } => Err(Error::InvalidOrder(
            "a matrix order inside a block must list its `vars`".into(),
        )),
        OrderSpec::Block { front, back } => {
            let mut v = spec_vars(ctx, front)?;
            v.extend(spec_vars(ctx, back)?);
            v.sort_unstable();
            Ok(v)
        }
    }
}

fn matrix_cmp<E: Natural>(rows: &[Vec<i64>], u: &Monomial<E>, v: &Monomial<E>) -> Ordering {
    if let (Some(a), Some(b)) = (u.to_u64s(), v.to_u64s()) {
        let fast = rows.iter().try_fold(Ordering::Equal, |acc, row| {
            if acc != Ordering::Equal {
                return Some(acc);
            }
            let mut s: i128 = 0;
            for ((&w, &x), &y) in row.iter().zip(&a).zip(&b) {
                let d = i128::from(x) - i128::from(y);
                s = s.checked_add(i128::from(w).checked_mul(d)?)?;
            }
            Some(s.cmp(&0))
        });
        if let Some(ord) = fast {
            return ord;
        }
    }
    for row in rows {
        let s: BigInt = row
            .iter()
            .zip(u.exponents().iter().zip(v.exponents()))
            .map(|(&w, (x, y))| BigInt::from(w) * (x.to_bigint() - y.to_bigint()))
            .sum();
        if !s.is_zero() {
            return if s > BigInt::zero() {
                Ordering::Greater
            } else {
                Ordering::Less
            };
        }
    }
    Ordering::Equal
}

/// Serialized monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum OrderSpec {
    Lex {
        vars: Vec<String>,
    },
    Matrix {
        rows: Vec<Vec<i64>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        vars: Option<Vec<String>>,
    },
    Block {
        front: Box<OrderSpec>,
        back: Box<OrderSpec>,
    },
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type M = Monomial<u32>;

    fn heaviest_z2_matrix() -> MonomialOrder {
        MonomialOrder::matrix(vec![
            vec![0, 0, 0, 1, 0],
            vec![1, 1, 1, 0, 1],
            vec![1, 0, 0, 0, 0],
            vec![0, 1, 0, 0, 0],
            vec![0, 0, 1, 0, 0],
        ])
        .unwrap()
    }

    #[test]
    fn compare_examples() {
        let lex = MonomialOrder::lex_natural(2);
        assert_eq!(
            lex.compare(&M::from_u64s(&[1, 0]), &M::from_u64s(&[0, 5]))
                .unwrap(),
            Ordering::Greater
        );
        let a = heaviest_z2_matrix();
        let z2 = M::from_u64s(&[0, 0, 0, 1, 0]);
        let x1_9 = M::from_u64s(&[9, 0, 0, 0, 0]);
        assert_eq!(a.compare(&z2, &x1_9).unwrap(), Ordering::Greater);
        assert_eq!(a.compare(&z2, &z2).unwrap(), Ordering::Equal);
        assert!(matches!(
            a.compare(&z2, &M::from_u64s(&[1])),
            Err(Error::ContextMismatch { .. })
        ));
    }

    #[test]
    fn matrix_validation() {
        assert!(MonomialOrder::matrix(vec![vec![1, 1], vec![2, 2]]).is_err());
        assert!(MonomialOrder::matrix(vec![vec![1, -1], vec![0, 1]]).is_err());
        assert!(MonomialOrder::matrix(vec![vec![1, 0], vec![0]]).is_err());
        assert!(MonomialOrder::heaviest_first(5, 3).unwrap() == heaviest_z2_matrix());
    }

    #[test]
    fn elimination_detection() {
        let lex = MonomialOrder::lex(vec![1, 2, 0, 3, 4]).unwrap();
        assert!(lex.eliminates(&[false, true, true, false, false]));
        assert!(!lex.eliminates(&[true, true, false, false, false]));
        assert!(heaviest_z2_matrix().eliminates(&[false, false, false, true, false]));
        assert!(!heaviest_z2_matrix().eliminates(&[true, false, false, false, false]));
        let block = MonomialOrder::block(
            4,
            vec![2, 3],
            MonomialOrder::lex_natural(2),
            MonomialOrder::lex_natural(2),
        )
        .unwrap();
        assert!(block.eliminates(&[false, false, true, true]));
        assert!(block.eliminates(&[false, false, true, false]));
        assert!(block.eliminates(&[true, false, true, true]));
        assert!(!block.eliminates(&[true, false, false, false]));
        assert!(!block.eliminates(&[false, false, false, true]));
    }

    #[test]
    fn spec_round_trip() {
        let ctx = VariableContext::new(["a", "b", "c", "d"]).unwrap();
        let specs = [
            r#"{"kind":"lex","vars":["c","a","d","b"]}"#,
            r#"{"kind":"matrix","rows":[[1,1,1,1],[1,0,0,0],[0,1,0,0],[0,0,1,0]]}"#,
            r#"{"kind":"block","front":{"kind":"lex","vars":["d","b"]},"back":{"kind":"matrix","rows":[[1,1],[0,1]],"vars":["c","a"]}}"#,
        ];
        for s in specs {
            let spec: OrderSpec = serde_json::from_str(s).unwrap();
            let ord = MonomialOrder::from_spec(&ctx, &spec).unwrap();
            let again = MonomialOrder::from_spec(&ctx, &ord.to_spec(&ctx)).unwrap();
            assert_eq!(ord, again, "{s}");
        }
        let block: OrderSpec = serde_json::from_str(specs[2]).unwrap();
        let ord = MonomialOrder::from_spec(&ctx, &block).unwrap();
        // d and b dominate; in the back block total degree ties, then the a column.
        assert_eq!(
            ord.cmp(&M::from_u64s(&[0, 1, 0, 0]), &M::from_u64s(&[5, 0, 5, 0])),
            Ordering::Greater
        );
        assert_eq!(
            ord.cmp(&M::from_u64s(&[0, 0, 1, 0]), &M::from_u64s(&[1, 0, 0, 0])),
            Ordering::Less
        );
        assert!(ord.eliminates(&[false, true, false, true]));
        let bad: OrderSpec = serde_json::from_str(r#"{"kind":"lex","vars":["a","b"]}"#).unwrap();
        assert!(MonomialOrder::from_spec(&ctx, &bad).is_err());
    }

    fn orders() -> Vec<MonomialOrder> {
        vec![
            MonomialOrder::lex_natural(3),
            MonomialOrder::lex(vec![2, 0, 1]).unwrap(),
            MonomialOrder::matrix(vec![vec![1, 1, 1], vec![0, 0, 1], vec![0, 1, 0]]).unwrap(),
            MonomialOrder::matrix(vec![vec![2, 1, 3], vec![1, -1, 0], vec![0, 1, 0]]).unwrap(),
            MonomialOrder::block(
                3,
                vec![1],
                MonomialOrder::lex_natural(1),
                MonomialOrder::lex(vec![1, 0]).unwrap(),
            )
            .unwrap(),
        ]
    }

    proptest! {
        #[test]
        fn total_and_multiplicative(
            u in prop::collection::vec(0u64..6, 3),
            v in prop::collection::vec(0u64..6, 3),
            w in prop::collection::vec(0u64..6, 3),
        ) {
            let (u, v, w) = (M::from_u64s(&u), M::from_u64s(&v), M::from_u64s(&w));
            for ord in orders() {
                let uv = ord.cmp(&u, &v);
                prop_assert_eq!(uv == Ordering::Equal, u == v);
                prop_assert_eq!(uv.reverse(), ord.cmp(&v, &u));
                prop_assert_eq!(ord.cmp(&u.mul(&w), &v.mul(&w)), uv);
                if uv == Ordering::Less && ord.cmp(&v, &w) == Ordering::Less {
                    prop_assert_eq!(ord.cmp(&u, &w), Ordering::Less);
                }
                prop_assert_ne!(ord.cmp(&u.mul(&w), &u), Ordering::Less);
            }
        }
    }
}
