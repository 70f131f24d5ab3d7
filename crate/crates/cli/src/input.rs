//! Parsing of the JSON payloads accepted by the commands.

use serde_json::Value;
use sumsets::binomial::binomial_from_json;
use sumsets::{
    algorithm1, recognize_generators, BigFiniteSet, BigIdeal, DiophantineSystem, IdealResult,
    SumsetSemigroupSpec, System, VariableContext,
};

use crate::CliError;

/// A semigroup given by its generators, with or without a computed ideal.
pub struct Semigroup {
    pub ideal: BigIdeal,
    /// Generator sets in variable order, when known.
    pub generators: Option<Vec<BigFiniteSet>>,
    /// Intermediate bases, when the ideal was computed here.
    pub computed: Option<IdealResult>,
}

pub enum Payload {
    Semigroup(Box<Semigroup>),
    System(System),
}

pub fn parse(text: &str) -> Result<Payload, CliError> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| CliError::Invalid(format!("malformed JSON: {e}")))?;
    if value.get("equations").is_some() {
        let sys: DiophantineSystem = serde_json::from_value(value).map_err(invalid)?;
        return Ok(Payload::System(sys));
    }
    if value.get("ideal").is_some() {
        return parse_ideal(&value).map(|s| Payload::Semigroup(Box::new(s)));
    }
    if value.get("generators").is_some() {
        return parse_raw(value).map(|s| Payload::Semigroup(Box::new(s)));
    }
    let spec: SumsetSemigroupSpec = serde_json::from_value(value).map_err(invalid)?;
    from_spec(&spec).map(|s| Payload::Semigroup(Box::new(s)))
}

pub fn semigroup(payload: Payload, command: &str) -> Result<Semigroup, CliError> {
    match payload {
        Payload::Semigroup(s) => Ok(*s),
        Payload::System(_) => Err(CliError::Invalid(format!(
            "`{command}` needs a semigroup or an ideal, not a system"
        ))),
    }
}

fn invalid(e: impl std::fmt::Display) -> CliError {
    CliError::Invalid(e.to_string())
}

fn from_spec(spec: &SumsetSemigroupSpec) -> Result<Semigroup, CliError> {
    spec.validate()?;
    let generators = spec.generators()?;
    let result = algorithm1(spec)?;
    Ok(Semigroup {
        ideal: result.ideal.clone(),
        generators: Some(generators),
        computed: Some(result),
    })
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInput {
    generators: Vec<BigFiniteSet>,
    k: u64,
    a: u64,
    b: u64,
}

/// Raw sets are matched to the grid family; the ideal keeps the input order
/// of the generators and names each variable after its role.
fn parse_raw(value: Value) -> Result<Semigroup, CliError> {
    let raw: RawInput = serde_json::from_value(value).map_err(invalid)?;
    let rec = recognize_generators(&raw.generators, raw.k, raw.a, raw.b)?;
    let result = algorithm1(&rec.spec)?;
    let roles = rec.spec.variables();
    let perm: Vec<usize> = (0..raw.generators.len())
        .map(|i| {
            rec.source
                .iter()
                .position(|&s| s == i)
                .expect("recognition covers every generator")
        })
        .collect();
    let names = perm.iter().map(|&j| roles.name(j).to_string()).collect();
    let ideal = result.ideal.permute_variables(&perm, names)?;
    Ok(Semigroup {
        ideal,
        generators: Some(raw.generators),
        computed: Some(result),
    })
}

fn parse_ideal(value: &Value) -> Result<Semigroup, CliError> {
    let names: Vec<String> = match value.get("variables") {
        Some(v) => serde_json::from_value(v.clone()).map_err(invalid)?,
        None => return Err(CliError::Invalid("an ideal needs its \"variables\"".into())),
    };
    let ctx = VariableContext::new(names)?;
    let binomials = value
        .get("ideal")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Invalid("\"ideal\" must be an array of binomials".into()))?
        .iter()
        .map(|b| binomial_from_json(&ctx, b))
        .collect::<Result<Vec<_>, _>>()?;
    let generators: Option<Vec<BigFiniteSet>> = match value.get("generators") {
        Some(v) => Some(serde_json::from_value(v.clone()).map_err(invalid)?),
        None => None,
    };
    if let Some(g) = &generators {
        if g.len() != ctx.len() {
            return Err(CliError::Invalid(format!(
                "{} generators for {} variables",
                g.len(),
                ctx.len()
            )));
        }
    }
    let ideal = BigIdeal::new(ctx, binomials)?;
    Ok(Semigroup {
        ideal,
        generators,
        computed: None,
    })
}
