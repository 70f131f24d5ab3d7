use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use serde_json::{Map, Value};

use super::monomial::{Monomial, VariableContext};
use super::order::MonomialOrder;
use crate::error::{Error, Result};
use crate::io::JsonNat;
use crate::num::Natural;

/// `X^lead − X^trail` with `lead ≠ trail`. The zero binomial is `None`
/// wherever an operation can produce it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Binomial<E = BigUint> {
    lead: Monomial<E>,
    trail: Monomial<E>,
}

impl<E: Natural> Binomial<E> {
    /// `None` when `lead == trail`.
    pub fn new(lead: Monomial<E>, trail: Monomial<E>) -> Option<Self> {
        assert_eq!(
            lead.nvars(),
            trail.nvars(),
            "binomial sides over different variable counts"
        );
        (lead != trail).then_some(Self { lead, trail })
    }

    pub fn from_u64s(lead: &[u64], trail: &[u64]) -> Option<Self> {
        Self::new(Monomial::from_u64s(lead), Monomial::from_u64s(trail))
    }

    /// Builds the binomial and orients it so that `lead ≻ trail`.
    pub fn oriented(lead: Monomial<E>, trail: Monomial<E>, ord: &MonomialOrder) -> Option<Self> {
        Self::new(lead, trail).map(|b| b.orient(ord))
    }

    pub fn lead(&self) -> &Monomial<E> {
        &self.lead
    }

    pub fn trail(&self) -> &Monomial<E> {
        &self.trail
    }

    pub fn nvars(&self) -> usize {
        self.lead.nvars()
    }

    pub fn into_parts(self) -> (Monomial<E>, Monomial<E>) {
        (self.lead, self.trail)
    }

    pub fn orient(self, ord: &MonomialOrder) -> Self {
        if ord.cmp(&self.lead, &self.trail) == Ordering::Less {
            self.swapped()
        } else {
            self
        }
    }

    pub fn swapped(self) -> Self {
        Self {
            lead: self.trail,
            trail: self.lead,
        }
    }

    pub fn is_oriented(&self, ord: &MonomialOrder) -> bool {
        ord.cmp(&self.lead, &self.trail) == Ordering::Greater
    }

    /// `lead − trail` as an integer vector.
    pub fn exponent_difference(&self) -> Vec<BigInt> {
        self.lead
            .exponents()
            .iter()
            .zip(self.trail.exponents())
            .map(|(a, b)| a.to_bigint() - b.to_bigint())
            .collect()
    }

    pub fn supported_on(&self, allowed: &[bool]) -> bool {
        self.lead.supported_on(allowed) && self.trail.supported_on(allowed)
    }

    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self {
            lead: self.lead.permuted(perm),
            trail: self.trail.permuted(perm),
        }
    }

    pub fn display<'a>(&'a self, ctx: &'a VariableContext) -> impl std::fmt::Display + 'a {
        BinomialDisplay { b: self, ctx }
    }
}

/// S-binomial of two oriented binomials:
/// `(L/lead_f)·f − (L/lead_g)·g = (L/lead_g)·trail_g − (L/lead_f)·trail_f`
/// with `L = lcm(lead_f, lead_g)`, oriented under `ord`.
pub fn s_binomial<E: Natural>(
    f: &Binomial<E>,
    g: &Binomial<E>,
    ord: &MonomialOrder,
) -> Option<Binomial<E>> {
    let l = f.lead.lcm(&g.lead);
    let from_g = l.div(&g.lead).expect("lcm is a multiple").mul(&g.trail);
    let from_f = l.div(&f.lead).expect("lcm is a multiple").mul(&f.trail);
    Binomial::oriented(from_g, from_f, ord)
}

struct MonomialDisplay<'a, E> {
    m: &'a Monomial<E>,
    ctx: &'a VariableContext,
}

impl<E: Natural> std::fmt::Display for MonomialDisplay<'_, E> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (i, e) in self.m.exponents().iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.ctx.name(i))?;
            if !e.is_one() {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

struct BinomialDisplay<'a, E> {
    b: &'a Binomial<E>,
    ctx: &'a VariableContext,
}

impl<E: Natural> std::fmt::Display for BinomialDisplay<'_, E> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} - {}",
            MonomialDisplay {
                m: &self.b.lead,
                ctx: self.ctx
            },
            MonomialDisplay {
                m: &self.b.trail,
                ctx: self.ctx
            }
        )
    }
}

/// Text form of a monomial: `x1^7*z3^2`, or `1`.
pub fn format_monomial<E: Natural>(ctx: &VariableContext, m: &Monomial<E>) -> String {
    MonomialDisplay { m, ctx }.to_string()
}

/// Text form of a binomial: `x1^7*z3^2 - z2^3`.
pub fn format_binomial<E: Natural>(ctx: &VariableContext, b: &Binomial<E>) -> String {
    b.display(ctx).to_string()
}

/// Parses `x1^7*z3^2`, `x1**7 z3^2` or `1`. Repeated variables multiply.
pub fn parse_monomial<E: Natural>(ctx: &VariableContext, text: &str) -> Result<Monomial<E>> {
    let text = text.trim();
    let mut exps = vec![E::zero(); ctx.len()];
    if text == "1" {
        return Ok(Monomial::new(exps));
    }
    let normalized = text.replace("**", "^");
    for factor in normalized
        .split(|c: char| c == '*' || c.is_whitespace())
        .filter(|s| !s.is_empty())
    {
        let (name, power) = match factor.split_once('^') {
            Some((n, p)) => {
                let p = p.trim().trim_start_matches('{').trim_end_matches('}');
                let power: E = p
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?;
                (n.trim(), power)
            }
            None => (factor, E::one()),
        };
        let i = ctx.index_of(name)?;
        exps[i] = exps[i].add_exact(&power);
    }
    if exps.iter().all(|e| e.is_zero()) {
        return Err(Error::Parse(format!("empty monomial {text:?}")));
    }
    Ok(Monomial::new(exps))
}

/// Parses `lead - trail`. A zero binomial is an error.
pub fn parse_binomial<E: Natural>(ctx: &VariableContext, text: &str) -> Result<Binomial<E>> {
    let text = text.trim();
    let (lhs, rhs) = match text.strip_prefix('-') {
        // `-lead + trail`, the form some systems print.
        Some(rest) => {
            let (a, b) = rest
                .split_once('+')
                .ok_or_else(|| Error::Parse(format!("not a binomial: {text:?}")))?;
            (b, a)
        }
        None => text
            .split_once('-')
            .ok_or_else(|| Error::Parse(format!("not a binomial: {text:?}")))?,
    };
    let lead = parse_monomial(ctx, lhs)?;
    let trail = parse_monomial(ctx, rhs)?;
    Binomial::new(lead, trail).ok_or_else(|| Error::Parse(format!("zero binomial {text:?}")))
}

pub fn monomial_to_json<E: Natural>(ctx: &VariableContext, m: &Monomial<E>) -> Value {
    let mut map = Map::new();
    for i in m.support() {
        map.insert(
            ctx.name(i).to_string(),
            serde_json::to_value(JsonNat::from_natural(&m.exponents()[i])).unwrap(),
        );
    }
    Value::Object(map)
}

pub fn monomial_from_json<E: Natural>(ctx: &VariableContext, v: &Value) -> Result<Monomial<E>> {
    let map = v
        .as_object()
        .ok_or_else(|| Error::Parse("monomial must be a JSON object".into()))?;
    let mut exps = vec![E::zero(); ctx.len()];
    for (name, e) in map {
        let n: JsonNat =
            serde_json::from_value(e.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let i = ctx.index_of(name)?;
        exps[i] = n
            .to_natural()
            .ok_or_else(|| Error::Parse(format!("exponent of {name} out of range")))?;
    }
    Ok(Monomial::new(exps))
}

/// `{"lead": {"x1":7,"z3":2}, "trail": {"z2":3}}`.
pub fn binomial_to_json<E: Natural>(ctx: &VariableContext, b: &Binomial<E>) -> Value {
    let mut map = Map::new();
    map.insert("lead".into(), monomial_to_json(ctx, &b.lead));
    map.insert("trail".into(), monomial_to_json(ctx, &b.trail));
    Value::Object(map)
}

/// Accepts the object form or the text form.
pub fn binomial_from_json<E: Natural>(ctx: &VariableContext, v: &Value) -> Result<Binomial<E>> {
    if let Some(text) = v.as_str() {
        return parse_binomial(ctx, text);
    }
    let get = |key: &str| {
        v.get(key)
            .ok_or_else(|| Error::Parse(format!("binomial is missing `{key}`")))
    };
    let lead = monomial_from_json(ctx, get("lead")?)?;
    let trail = monomial_from_json(ctx, get("trail")?)?;
    Binomial::new(lead, trail).ok_or_else(|| Error::Parse("zero binomial".into()))
}
