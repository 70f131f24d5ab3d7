//! The subcommands. Each produces a JSON value and a plain-text rendering.

use std::fmt::Write as _;

use serde::Deserialize;
use serde_json::{json, Value};
use sumsets::binomial::binomial_to_json;
use sumsets::elasticity::format_ratio;
use sumsets::semigroup::Stage;
use sumsets::{
    acceptable_elasticity, elasticity_data, elasticity_from_system, eval_word, express,
    format_binomial, format_monomial, grid_set, hilbert_basis, lattice_from_ideal,
    system_strongly_reduced, verify_ideal, AcceptableOptions, BigFiniteSet, BigIdeal, BigMonomial,
    ElasticityData, Error, GeneratorWord, Lattice, MonomialOrder, OrderSpec, VariableContext,
};

use crate::input::{self, Payload, Semigroup};
use crate::{AcceptableArgs, CliError, Command};

pub struct Output {
    pub json: Value,
    pub text: String,
    /// Set when the result is printed but the run must report failure.
    pub violation: Option<String>,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Self {
            json,
            text,
            violation: None,
        }
    }
}

pub fn run(command: &Command, text: &str) -> Result<Output, CliError> {
    match command {
        Command::Sumset => sumset(text),
        Command::Ideal { provenance } => {
            ideal(input::semigroup(input::parse(text)?, "ideal")?, *provenance)
        }
        Command::Elasticity(args) => elasticity(input::parse(text)?, args),
        Command::Acceptable(args) => {
            acceptable(input::semigroup(input::parse(text)?, "acceptable")?, args)
        }
        Command::Express {
            target,
            power,
            order,
        } => express_power(
            input::semigroup(input::parse(text)?, "express")?,
            target,
            *power,
            order.as_deref(),
        ),
        Command::Hilbert { doubled } => hilbert(input::parse(text)?, *doubled),
        Command::Verify { degree } => {
            verify(input::semigroup(input::parse(text)?, "verify")?, *degree)
        }
    }
}

fn binomials_json(ctx: &VariableContext, list: &[sumsets::BigBinomial]) -> Value {
    Value::Array(list.iter().map(|b| binomial_to_json(ctx, b)).collect())
}

fn stage_json(stage: &Stage) -> Value {
    json!({
        "variables": stage.context.names(),
        "order": stage.order.to_spec(&stage.context),
        "binomials": binomials_json(&stage.context, &stage.binomials),
    })
}

fn text_lines(ctx: &VariableContext, list: &[sumsets::BigBinomial]) -> String {
    list.iter()
        .map(|b| format_binomial(ctx, b) + "\n")
        .collect()
}

/// Every binomial must be an equality of sumsets.
fn check_sound(sg: &Semigroup) -> Result<(), CliError> {
    let Some(gens) = &sg.generators else {
        return Ok(());
    };
    for b in sg.ideal.generators() {
        let word = |m: &BigMonomial| m.to_u64s().map(GeneratorWord);
        let holds = match (word(b.lead()), word(b.trail())) {
            (Some(u), Some(v)) => eval_word(&u, gens)? == eval_word(&v, gens)?,
            _ => false,
        };
        if !holds {
            let text = format_binomial(sg.ideal.context(), b);
            return Err(CliError::Invariant(format!(
                "computed binomial {text} is not a sumset equality"
            )));
        }
    }
    Ok(())
}

fn ideal(sg: Semigroup, provenance: bool) -> Result<Output, CliError> {
    check_sound(&sg)?;
    let ctx = sg.ideal.context();
    let mut json = json!({ "variables": ctx.names() });
    if let Some(g) = &sg.generators {
        json["generators"] = serde_json::to_value(g).expect("sets serialize");
    }
    json["ideal"] = binomials_json(ctx, sg.ideal.generators());
    let mut text = text_lines(ctx, sg.ideal.generators());
    if provenance {
        let result = sg.computed.as_ref().ok_or_else(|| {
            CliError::Invalid("--provenance needs a semigroup, not a finished ideal".into())
        })?;
        let p = &result.provenance;
        let stages = [
            ("g1", &p.g1),
            ("g_prime", &p.g_prime),
            ("g2", &p.g2),
            ("g3", &p.g3),
        ];
        let mut map = serde_json::Map::new();
        for (name, stage) in stages {
            map.insert(name.into(), stage_json(stage));
            let _ = writeln!(
                text,
                "\n{name} ({} binomials in {}):",
                stage.binomials.len(),
                stage.context.names().join(", ")
            );
            text += &text_lines(&stage.context, &stage.binomials);
        }
        json["provenance"] = Value::Object(map);
    }
    Ok(Output::ok(json, text))
}

fn options(args: &AcceptableArgs) -> AcceptableOptions {
    AcceptableOptions {
        combination_depth: args.depth,
    }
}

fn check_basis(data: &ElasticityData) -> Result<(), CliError> {
    let doubled = data.equations.doubled();
    if !data.hilbert_basis.is_minimal()
        || !data
            .hilbert_basis
            .elements()
            .iter()
            .all(|e| doubled.is_solution(e))
    {
        return Err(CliError::Invariant(
            "Hilbert basis fails minimality or does not solve the system".into(),
        ));
    }
    Ok(())
}

fn elasticity(payload: Payload, args: &AcceptableArgs) -> Result<Output, CliError> {
    let (data, ideal) = match &payload {
        Payload::System(sys) => {
            if !system_strongly_reduced(sys) {
                return Ok(not_strongly_reduced());
            }
            (elasticity_from_system(sys)?, None)
        }
        Payload::Semigroup(sg) => match elasticity_data(&sg.ideal) {
            Err(Error::NotStronglyReduced) => return Ok(not_strongly_reduced()),
            other => (other?, Some(&sg.ideal)),
        },
    };
    check_basis(&data)?;
    let rho = format_ratio(&data.rho);
    let mut json = json!({
        "rho": rho,
        "strongly_reduced": true,
        "hilbert_basis_size": data.hilbert_basis.len(),
        "acceptable": null,
        "witness": null,
        "atoms_at_rho": sumsets::elasticity_atoms(&data.hilbert_basis, &data.rho),
    });
    let mut text = format!(
        "rho = {rho}\nstrongly reduced\nHilbert basis of (A|-A): {} elements\n",
        data.hilbert_basis.len()
    );
    if let Some(ideal) = ideal {
        let acc = acceptable_elasticity(ideal, &data.hilbert_basis, &options(args))?;
        json["acceptable"] = acc.acceptable.into();
        json["witness"] = witness_json(ideal, &acc.witness);
        json["atoms_at_rho"] = serde_json::to_value(&acc.atoms).expect("atoms serialize");
        text += &acceptable_text(ideal, acc.acceptable, &acc.witness);
        json["lattice_saturated"] = saturated(ideal)?.into();
    }
    json["equations"] = serde_json::to_value(&data.equations).expect("systems serialize");
    Ok(Output::ok(json, text))
}

fn saturated(ideal: &BigIdeal) -> Result<bool, CliError> {
    let lattice: Lattice = lattice_from_ideal(ideal)?;
    Ok(lattice.is_saturated())
}

fn not_strongly_reduced() -> Output {
    let json = json!({
        "rho": null,
        "strongly_reduced": false,
        "hilbert_basis_size": null,
        "acceptable": null,
        "witness": null,
        "atoms_at_rho": [],
    });
    Output::ok(
        json,
        "not strongly reduced: the elasticity is infinite\n".into(),
    )
}

fn witness_json(ideal: &BigIdeal, witness: &Option<sumsets::BigBinomial>) -> Value {
    witness
        .as_ref()
        .map_or(Value::Null, |w| binomial_to_json(ideal.context(), w))
}

fn acceptable_text(
    ideal: &BigIdeal,
    acceptable: bool,
    witness: &Option<sumsets::BigBinomial>,
) -> String {
    match witness {
        Some(w) => format!(
            "acceptable, witness {}\n",
            format_binomial(ideal.context(), w)
        ),
        None if acceptable => "acceptable\n".into(),
        None => "not acceptable\n".into(),
    }
}

fn acceptable(sg: Semigroup, args: &AcceptableArgs) -> Result<Output, CliError> {
    let data = elasticity_data(&sg.ideal)?;
    check_basis(&data)?;
    let acc = acceptable_elasticity(&sg.ideal, &data.hilbert_basis, &options(args))?;
    let json = json!({
        "rho": format_ratio(&acc.rho),
        "acceptable": acc.acceptable,
        "witness": witness_json(&sg.ideal, &acc.witness),
        "atoms_at_rho": acc.atoms,
    });
    let text = format!(
        "rho = {}\n{}",
        format_ratio(&acc.rho),
        acceptable_text(&sg.ideal, acc.acceptable, &acc.witness)
    );
    Ok(Output::ok(json, text))
}

fn parse_order(
    ctx: &VariableContext,
    target: usize,
    choice: Option<&str>,
) -> Result<MonomialOrder, CliError> {
    let n = ctx.len();
    match choice {
        None => Ok(MonomialOrder::heaviest_first(n, target)?),
        Some("lex") => {
            let priority = std::iter::once(target)
                .chain((0..n).filter(|&i| i != target))
                .collect();
            Ok(MonomialOrder::lex(priority)?)
        }
        Some(other) => {
            let path = other.strip_prefix("matrix:").ok_or_else(|| {
                CliError::Invalid(format!("unknown order {other:?}; use lex or matrix:<file>"))
            })?;
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Invalid(format!("{path}: {e}")))?;
            let value: Value = serde_json::from_str(&text)
                .map_err(|e| CliError::Invalid(format!("{path}: {e}")))?;
            if value.is_array() {
                let rows: Vec<Vec<i64>> =
                    serde_json::from_value(value).map_err(|e| CliError::Invalid(e.to_string()))?;
                Ok(MonomialOrder::matrix(rows)?)
            } else {
                let spec: OrderSpec =
                    serde_json::from_value(value).map_err(|e| CliError::Invalid(e.to_string()))?;
                Ok(MonomialOrder::from_spec(ctx, &spec)?)
            }
        }
    }
}

fn factorization(word: &GeneratorWord, gens: &[BigFiniteSet]) -> String {
    let terms: Vec<String> = word
        .exponents()
        .iter()
        .zip(gens)
        .filter(|(w, _)| **w > 0)
        .map(|(w, g)| format!("{w}⊗{g}"))
        .collect();
    if terms.is_empty() {
        "{0}".into()
    } else {
        terms.join("+")
    }
}

fn express_power(
    sg: Semigroup,
    target: &str,
    power: u64,
    order: Option<&str>,
) -> Result<Output, CliError> {
    let ctx = sg.ideal.context();
    let t = ctx.index_of(target)?;
    let ord = parse_order(ctx, t, order)?;
    let word = express(&sg.ideal, t, power, &ord)?;
    let monomial = format_monomial(ctx, &BigMonomial::from_u64s(word.exponents()));
    let mut json = json!({
        "target": target,
        "power": power,
        "order": ord.to_spec(ctx),
        "word": word,
        "monomial": monomial,
    });
    let mut text = format!("{target}^{power} = {monomial}\n");
    if let Some(gens) = &sg.generators {
        let value = eval_word(&word, gens)?;
        if value != gens[t].fold(power) {
            return Err(CliError::Invariant(format!(
                "{monomial} does not evaluate to {power}⊗{}",
                gens[t]
            )));
        }
        let f = factorization(&word, gens);
        let _ = writeln!(text, "{power}⊗{} = {f}", gens[t]);
        json["factorization"] = f.into();
        json["set"] = serde_json::to_value(&value).expect("sets serialize");
    }
    Ok(Output::ok(json, text))
}

#[derive(Deserialize)]
#[serde(tag = "op", rename_all = "lowercase", deny_unknown_fields)]
enum SumsetOp {
    Add {
        sets: Vec<BigFiniteSet>,
    },
    Fold {
        set: BigFiniteSet,
        times: u64,
    },
    Grid {
        n: u64,
        m: u64,
        k: u64,
        a: u64,
        b: u64,
        #[serde(default)]
        shift: u64,
    },
    Eval {
        generators: Vec<BigFiniteSet>,
        word: GeneratorWord,
    },
}

fn sumset(text: &str) -> Result<Output, CliError> {
    let op: SumsetOp =
        serde_json::from_str(text).map_err(|e| CliError::Invalid(format!("sumset input: {e}")))?;
    let result = match op {
        SumsetOp::Add { sets } => {
            let mut iter = sets.into_iter();
            let first = iter
                .next()
                .ok_or_else(|| CliError::Invalid("`add` needs at least one set".into()))?;
            iter.fold(first, |acc, s| acc.add(&s))
        }
        SumsetOp::Fold { set, times } => set.fold(times),
        SumsetOp::Grid {
            n,
            m,
            k,
            a,
            b,
            shift,
        } => {
            let grid: BigFiniteSet = grid_set(n, m, k, a, b)?;
            grid.shift(&shift.into())
        }
        SumsetOp::Eval { generators, word } => eval_word(&word, &generators)?,
    };
    let text = format!("{result}\n");
    Ok(Output::ok(json!({ "result": result }), text))
}

fn hilbert(payload: Payload, doubled: bool) -> Result<Output, CliError> {
    let Payload::System(sys) = payload else {
        return Err(CliError::Invalid(
            "`hilbert` needs {\"equations\": [...]}".into(),
        ));
    };
    let sys = if doubled { sys.doubled() } else { sys };
    let hb = hilbert_basis(&sys);
    if !hb.is_minimal() || !hb.elements().iter().all(|e| sys.is_solution(e)) {
        return Err(CliError::Invariant(
            "Hilbert basis fails minimality or does not solve the system".into(),
        ));
    }
    let text = hb
        .elements()
        .iter()
        .map(|e| e.iter().map(u64::to_string).collect::<Vec<_>>().join(" ") + "\n")
        .collect();
    Ok(Output::ok(
        serde_json::to_value(&hb).expect("bases serialize"),
        text,
    ))
}

fn verify(sg: Semigroup, degree: u64) -> Result<Output, CliError> {
    let gens = sg
        .generators
        .as_ref()
        .ok_or_else(|| CliError::Invalid("`verify` needs the generator sets".into()))?;
    let report = verify_ideal(&sg.ideal, gens, degree)?;
    let ctx = sg.ideal.context();
    let missing: Vec<Value> = report
        .missing
        .iter()
        .map(|(u, v)| json!({ "left": u, "right": v }))
        .collect();
    let json = json!({
        "clean": report.is_clean(),
        "degree": degree,
        "relations_checked": report.relations_checked,
        "unsound": binomials_json(ctx, &report.unsound),
        "missing": missing,
    });
    let mut text = format!(
        "{} relations of degree <= {degree} checked: {}\n",
        report.relations_checked,
        if report.is_clean() {
            "clean"
        } else {
            "violations found"
        }
    );
    for b in &report.unsound {
        let _ = writeln!(text, "unsound: {}", format_binomial(ctx, b));
    }
    for (u, v) in &report.missing {
        let _ = writeln!(text, "missing: {:?} = {:?}", u.exponents(), v.exponents());
    }
    let violation = (!report.is_clean()).then(|| {
        format!(
            "{} unsound binomials, {} missing relations",
            report.unsound.len(),
            report.missing.len()
        )
    });
    Ok(Output {
        json,
        text,
        violation,
    })
}
