//! End-to-end acceptance checks. Each check prints one PASS/FAIL line; the
//! process fails if any check fails.

use std::collections::{HashMap, HashSet};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sumsets::elasticity::format_ratio;
use sumsets::{
    acceptable_elasticity, algorithm1, closed_form_check, elasticity_atoms, elasticity_data,
    elasticity_from_system, eval_word, express, format_binomial, hilbert_basis, lattice_equations,
    lattice_from_ideal, pair_ideal_generator, parse_binomial, parse_monomial, recognize_generators,
    relations_up_to_degree, strongly_reduced, verify_ideal, AcceptableOptions, BigIdeal, Binomial,
    DiophantineSystem, FiniteSet, GeneratorWord, HilbertBasisSet, Lattice, MonomialOrder, PureGrid,
    ShiftedGrid, SumsetSemigroupSpec, VariableContext,
};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fail<E: std::fmt::Debug>(e: E) -> String {
    format!("{e:?}")
}

fn five_gen_spec() -> SumsetSemigroupSpec {
    SumsetSemigroupSpec {
        singletons: vec![3, 4],
        k: 3,
        a: 1,
        b: 2,
        shifted_grids: vec![
            ShiftedGrid { a: 6, n: 0, m: 1 },
            ShiftedGrid { a: 7, n: 2, m: 0 },
        ],
        pure_grids: vec![PureGrid { n: 3, m: 0 }],
    }
}

fn sets(raw: &[&[u64]]) -> Vec<FiniteSet<u64>> {
    raw.iter()
        .map(|s| FiniteSet::from_u64s(s).unwrap())
        .collect()
}

fn golden_binomials(ctx: &VariableContext, text: &str) -> HashSet<Binomial> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_binomial(ctx, l).unwrap())
        .collect()
}

fn golden_vectors<T: std::str::FromStr>(text: &str) -> Vec<Vec<T>>
where
    T::Err: std::fmt::Debug,
{
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split_whitespace().map(|x| x.parse().unwrap()).collect())
        .collect()
}

fn five_gen_ideal() -> Result<BigIdeal, String> {
    Ok(algorithm1(&five_gen_spec()).map_err(fail)?.ideal)
}

fn criterion1() -> Check {
    let result = algorithm1::<num_bigint::BigUint>(&five_gen_spec()).map_err(fail)?;
    let p = &result.provenance;
    let g1 = golden_binomials(&p.g1.context, include_str!("fixtures/five_gen_g1.txt"));
    let g3 = golden_binomials(&p.g3.context, include_str!("fixtures/five_gen_g3.txt"));
    let out = golden_binomials(
        result.ideal.context(),
        include_str!("fixtures/five_gen_ideal.txt"),
    );
    let got_g1: HashSet<Binomial> = p.g1.binomials.iter().cloned().collect();
    let got_g3: HashSet<Binomial> = p.g3.binomials.iter().cloned().collect();
    let got: HashSet<Binomial> = result.ideal.generators().iter().cloned().collect();
    ensure(g1.len() == 9 && got_g1 == g1, || {
        format!("G1 differs ({} binomials)", got_g1.len())
    })?;
    ensure(got_g3 == g3, || {
        format!(
            "G3 differs: {} computed, {} expected",
            got_g3.len(),
            g3.len()
        )
    })?;
    ensure(out.len() == 25 && got == out, || {
        format!("ideal differs ({} binomials)", got.len())
    })?;
    ensure(result.ideal.generators().len() == 25, || {
        "duplicate output binomials".into()
    })
}

/// The relations of the pair semigroup that are minimal under the product
/// order on (u, v).
fn minimal_relations(a: u64, b: u64, k: u64) -> Vec<(GeneratorWord, GeneratorWord)> {
    let gens = sets(&[&[0, k * a], &[0, k * b]]);
    let rels = relations_up_to_degree(&gens, 2 * a + 2 * b);
    let below = |p: &(GeneratorWord, GeneratorWord), q: &(GeneratorWord, GeneratorWord)| {
        p != q
            && p.0 .0.iter().zip(&q.0 .0).all(|(x, y)| x <= y)
            && p.1 .0.iter().zip(&q.1 .0).all(|(x, y)| x <= y)
    };
    rels.iter()
        .filter(|q| !rels.iter().any(|p| below(p, q)))
        .cloned()
        .collect()
}

fn criterion2() -> Check {
    for b in 2..=5u64 {
        for a in 1..b {
            if num_integer::gcd(a, b) != 1 {
                continue;
            }
            for k in 1..=3 {
                let g = pair_ideal_generator::<num_bigint::BigUint>(a, b, k).map_err(fail)?;
                let expected = (
                    GeneratorWord(g.lead().to_u64s().unwrap()),
                    GeneratorWord(g.trail().to_u64s().unwrap()),
                );
                let minimal = minimal_relations(a, b, k);
                ensure(minimal == [expected.clone()], || {
                    format!("(a,b,k)=({a},{b},{k}): oracle minimal relations {minimal:?}, generator {expected:?}")
                })?;
            }
        }
    }
    Ok(())
}

fn criterion3() -> Check {
    let ideal = five_gen_ideal()?;
    let lattice: Lattice = lattice_from_ideal(&ideal).map_err(fail)?;
    let expected: Vec<Vec<BigInt>> = golden_vectors(include_str!("fixtures/five_gen_lattice.txt"));
    ensure(lattice.generators() == expected.as_slice(), || {
        format!("lattice differs: {:?}", lattice.generators())
    })?;

    let eq = lattice_equations(&lattice).map_err(fail)?;
    let reference =
        DiophantineSystem::from_i64_rows(5, &[vec![-3, -4, 2, 1, 12], vec![-6, -8, 2, 0, 21]])
            .map_err(fail)?;
    ensure(eq.row_equivalent(&reference), || {
        format!("equations {:?} not row-equivalent", eq.equations())
    })?;
    ensure(hilbert_basis(&eq).is_empty(), || {
        "positive cone is not empty".into()
    })?;
    ensure(strongly_reduced(&ideal).map_err(fail)?, || {
        "not strongly reduced".into()
    })?;

    let data = elasticity_data(&ideal).map_err(fail)?;
    let hb: HashSet<Vec<u64>> = data.hilbert_basis.elements().iter().cloned().collect();
    let expected_hb: HashSet<Vec<u64>> =
        golden_vectors(include_str!("fixtures/five_gen_hilbert_basis.txt"))
            .into_iter()
            .collect();
    ensure(
        expected_hb.len() == 109 && data.hilbert_basis.len() == 109,
        || format!("Hilbert basis has {} elements", data.hilbert_basis.len()),
    )?;
    ensure(hb == expected_hb, || {
        "Hilbert basis differs from the expected one".into()
    })?;
    ensure(data.rho == BigRational::from_integer(3.into()), || {
        format!("rho = {}", data.rho)
    })?;

    let acc = acceptable_elasticity(&ideal, &data.hilbert_basis, &AcceptableOptions::default())
        .map_err(fail)?;
    let witness = acc
        .witness
        .as_ref()
        .map(|w| format_binomial(ideal.context(), w));
    ensure(
        acc.acceptable && witness.as_deref() == Some("x1^7*z3^2 - z2^3"),
        || format!("acceptable = {}, witness = {witness:?}", acc.acceptable),
    )?;
    let atom = acc
        .atoms
        .iter()
        .any(|p| p.concatenated() == [7, 0, 0, 0, 2, 0, 0, 0, 3, 0]);
    ensure(atom, || "atom ((7,0,0,0,2),(0,0,0,3,0)) missing".into())
}

/// Ideal of {0,3}, {0,4}, {7}+A_(2,3), with variables in that order.
fn grid34_ideal() -> Result<BigIdeal, String> {
    let raw = sets(&[
        &[0, 3],
        &[0, 4],
        &[7, 10, 11, 13, 14, 15, 17, 18, 19, 21, 22, 25],
    ]);
    let rec = recognize_generators(&raw, 1, 3, 4).map_err(fail)?;
    let ideal = algorithm1(&rec.spec).map_err(fail)?.ideal;
    let perm: Vec<usize> = (0..raw.len())
        .map(|i| rec.source.iter().position(|&s| s == i).unwrap())
        .collect();
    let names = vec!["x1".to_string(), "x2".to_string(), "x3".to_string()];
    let permuted = ideal.permute_variables(&perm, names).map_err(fail)?;
    let check = verify_ideal(&permuted, &raw, 4).map_err(fail)?;
    ensure(check.is_clean(), || {
        format!("grid ideal fails the oracle: {check:?}")
    })?;
    Ok(permuted)
}

fn criterion4() -> Check {
    let system =
        DiophantineSystem::from_i64_rows(3, &[vec![3, 4, 0], vec![0, 0, 1]]).map_err(fail)?;
    let data = elasticity_from_system(&system).map_err(fail)?;
    let expected = HilbertBasisSet::new(
        6,
        vec![
            vec![0, 0, 1, 0, 0, 1],
            vec![0, 1, 0, 0, 1, 0],
            vec![0, 3, 0, 4, 0, 0],
            vec![1, 0, 0, 1, 0, 0],
            vec![4, 0, 0, 0, 3, 0],
        ],
    );
    ensure(data.hilbert_basis == expected, || {
        format!("Hilbert basis {:?}", data.hilbert_basis.elements())
    })?;
    ensure(format_ratio(&data.rho) == "4/3", || {
        format!("rho = {}", data.rho)
    })?;
    let atoms: Vec<Vec<u64>> = elasticity_atoms(&data.hilbert_basis, &data.rho)
        .iter()
        .map(|p| p.concatenated())
        .collect();
    ensure(atoms == [vec![4, 0, 0, 0, 3, 0]], || {
        format!("atoms {atoms:?}")
    })?;

    let ideal = grid34_ideal()?;
    let eq =
        lattice_equations(&lattice_from_ideal::<_, BigInt>(&ideal).map_err(fail)?).map_err(fail)?;
    ensure(eq.row_equivalent(&system), || {
        format!("computed equations {:?}", eq.equations())
    })?;
    let acc = acceptable_elasticity(&ideal, &data.hilbert_basis, &AcceptableOptions::default())
        .map_err(fail)?;
    ensure(!acc.acceptable && acc.witness.is_none(), || {
        format!("acceptable = {}", acc.acceptable)
    })
}

fn criterion5() -> Check {
    let ideal = five_gen_ideal()?;
    let ctx = ideal.context().clone();
    let order = MonomialOrder::heaviest_first(5, 3).map_err(fail)?;
    let heaviest_z2_matrix = vec![
        vec![0, 0, 0, 1, 0],
        vec![1, 1, 1, 0, 1],
        vec![1, 0, 0, 0, 0],
        vec![0, 1, 0, 0, 0],
        vec![0, 0, 1, 0, 0],
    ];
    ensure(
        order == MonomialOrder::matrix(heaviest_z2_matrix).map_err(fail)?,
        || "order matrix differs".into(),
    )?;
    let basis: HashSet<Binomial> = ideal
        .groebner_basis(&order)
        .map_err(fail)?
        .iter()
        .cloned()
        .collect();
    let expected = golden_binomials(
        &ctx,
        include_str!("fixtures/five_gen_heaviest_z2_basis.txt"),
    );
    ensure(basis == expected, || {
        format!(
            "basis has {} elements, expected {}",
            basis.len(),
            expected.len()
        )
    })?;

    let table = [
        "x1^3*x2^3*z3^2",
        "x1^2*x2^4*z1*z3^2",
        "x1*x2^5*z1^2*z3^2",
        "x2^6*z1^3*z3^2",
        "x1^3*x2^4*z1^4*z3^2",
        "x1^2*x2^5*z1^5*z3^2",
    ];
    for (row, text) in table.iter().enumerate() {
        let i = row as u64 + 3;
        let word = express(&ideal, 3, i, &order).map_err(fail)?;
        let expected: sumsets::BigMonomial = parse_monomial(&ctx, text).map_err(fail)?;
        ensure(word.0 == expected.to_u64s().unwrap(), || {
            format!("i={i}: got {word:?}")
        })?;
    }
    let gens = five_gen_spec().generators::<u64>().map_err(fail)?;
    let target = FiniteSet::<u64>::from_u64s(&[7, 10, 13]).unwrap();
    for i in 3..=40 {
        let word = express(&ideal, 3, i, &order).map_err(fail)?;
        let closed = closed_form_check(i).map_err(fail)?;
        ensure(word == closed, || {
            format!("i={i}: express {word:?}, formula {closed:?}")
        })?;
        ensure(
            eval_word(&word, &gens).map_err(fail)? == target.fold(i),
            || format!("i={i}: sets differ"),
        )?;
    }
    Ok(())
}

fn criterion6() -> Check {
    let ideal = five_gen_ideal()?;
    let ctx = ideal.context().clone();
    let ord = ideal.default_order();
    let inside: Binomial = parse_binomial(&ctx, "x1*z2*z3 - x2*z1*z3").map_err(fail)?;
    let outside: Binomial = parse_binomial(&ctx, "x1*z2 - x2*z1").map_err(fail)?;
    ensure(
        ideal.contains_binomial(&inside, &ord).map_err(fail)?,
        || "x1*z2*z3 - x2*z1*z3 not in ideal".into(),
    )?;
    ensure(
        !ideal.contains_binomial(&outside, &ord).map_err(fail)?,
        || "x1*z2 - x2*z1 in ideal".into(),
    )?;
    let s = |v: &[u64]| FiniteSet::<u64>::from_u64s(v).unwrap();
    ensure(
        s(&[1, 3]).add(&s(&[1, 2, 3])) == s(&[1, 2, 3]).add(&s(&[1, 2, 3])),
        || "{1,3} identity fails".into(),
    )?;
    ensure(
        s(&[1, 2, 4, 5]).fold(2) == s(&[1, 2, 3, 4, 5]).fold(2),
        || "2-fold identity fails".into(),
    )?;
    ensure(
        s(&[1, 3]) != s(&[1, 2, 3]) && s(&[1, 2, 4, 5]) != s(&[1, 2, 3, 4, 5]),
        || "sets coincide".into(),
    )
}

fn random_spec(rng: &mut ChaCha8Rng) -> SumsetSemigroupSpec {
    let (a, b) = loop {
        let b = rng.gen_range(2..=4u64);
        let a = rng.gen_range(1..b);
        if num_integer::gcd(a, b) == 1 {
            break (a, b);
        }
    };
    let grid = |rng: &mut ChaCha8Rng| loop {
        let (n, m) = (rng.gen_range(0..=3u64), rng.gen_range(0..=3u64));
        if n + m > 0 {
            return (n, m);
        }
    };
    let p = rng.gen_range(0..=2);
    let grids = rng.gen_range(1..=3);
    let s = rng.gen_range(0..=grids);
    SumsetSemigroupSpec {
        singletons: (0..p).map(|_| rng.gen_range(1..=12)).collect(),
        k: rng.gen_range(1..=3),
        a,
        b,
        shifted_grids: (0..s)
            .map(|_| {
                let (n, m) = grid(rng);
                ShiftedGrid {
                    a: rng.gen_range(1..=12),
                    n,
                    m,
                }
            })
            .collect(),
        pure_grids: (s..grids)
            .map(|_| {
                let (n, m) = grid(rng);
                PureGrid { n, m }
            })
            .collect(),
    }
}

fn criterion7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2024);
    let mut relations = 0;
    for round in 0..24 {
        let spec = random_spec(&mut rng);
        let result =
            algorithm1::<num_bigint::BigUint>(&spec).map_err(|e| format!("{spec:?}: {e}"))?;
        let gens = spec.generators::<u64>().map_err(fail)?;
        let report = verify_ideal(&result.ideal, &gens, 4).map_err(fail)?;
        relations += report.relations_checked;
        ensure(report.is_clean(), || {
            format!("spec #{round} {spec:?}: {report:?}")
        })?;
    }
    ensure(relations > 0, || {
        "the oracle produced no relations at all".into()
    })
}

/// Nonnegative solutions of `Ax = 0` with every coordinate at most `bound`,
/// by splitting the variables in two halves and joining on `Ax`.
fn bounded_solutions(sys: &DiophantineSystem, bound: u64) -> Vec<Vec<u64>> {
    let n = sys.nvars();
    let rows = sys.big_rows();
    let half = n / 2;
    let enumerate = |range: std::ops::Range<usize>| {
        let mut out: Vec<(Vec<u64>, Vec<BigInt>)> =
            vec![(Vec::new(), vec![BigInt::from(0); rows.len()])];
        for j in range {
            let mut next = Vec::with_capacity(out.len() * (bound as usize + 1));
            for (x, ax) in &out {
                for v in 0..=bound {
                    let mut y = x.clone();
                    y.push(v);
                    let ay = ax
                        .iter()
                        .zip(&rows)
                        .map(|(s, r)| s + &r[j] * BigInt::from(v))
                        .collect();
                    next.push((y, ay));
                }
            }
            out = next;
        }
        out
    };
    let left = enumerate(0..half);
    let right = enumerate(half..n);
    let mut by_value: HashMap<Vec<BigInt>, Vec<&Vec<u64>>> = HashMap::new();
    for (x, ax) in &right {
        by_value.entry(ax.clone()).or_default().push(x);
    }
    let mut out = Vec::new();
    for (x, ax) in &left {
        let neg: Vec<BigInt> = ax.iter().map(|v| -v).collect();
        for y in by_value.get(&neg).into_iter().flatten() {
            let z: Vec<u64> = x.iter().chain(y.iter()).copied().collect();
            if z.iter().any(|&v| v > 0) {
                out.push(z);
            }
        }
    }
    out
}

fn decomposes(x: &[u64], basis: &[Vec<u64>], memo: &mut HashMap<Vec<u64>, bool>) -> bool {
    if x.iter().all(|&v| v == 0) {
        return true;
    }
    if let Some(&known) = memo.get(x) {
        return known;
    }
    let ok = basis.iter().any(|b| {
        b.iter().zip(x).all(|(bi, xi)| bi <= xi) && {
            let rest: Vec<u64> = x.iter().zip(b).map(|(xi, bi)| xi - bi).collect();
            decomposes(&rest, basis, memo)
        }
    });
    memo.insert(x.to_vec(), ok);
    ok
}

fn check_hilbert(sys: &DiophantineSystem, label: &str) -> Result<usize, String> {
    let hb = hilbert_basis(sys);
    ensure(hb.is_minimal(), || format!("{label}: basis not minimal"))?;
    for e in hb.elements() {
        ensure(sys.is_solution(e), || {
            format!("{label}: {e:?} is not a solution")
        })?;
    }
    let solutions = bounded_solutions(sys, 8);
    let mut memo = HashMap::new();
    for s in &solutions {
        ensure(decomposes(s, hb.elements(), &mut memo), || {
            format!("{label}: {s:?} does not decompose")
        })?;
    }
    Ok(solutions.len())
}

fn criterion8() -> Check {
    let ex14 =
        DiophantineSystem::from_i64_rows(5, &[vec![-3, -4, 2, 1, 12], vec![-6, -8, 2, 0, 21]])
            .map_err(fail)?;
    let ex15 =
        DiophantineSystem::from_i64_rows(3, &[vec![3, 4, 0], vec![0, 0, 1]]).map_err(fail)?;
    check_hilbert(&ex14, "five-generator A")?;
    check_hilbert(&ex14.doubled(), "five-generator (A|-A)")?;
    check_hilbert(&ex15.doubled(), "grid (A|-A)")?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x4b1d);
    for round in 0..10 {
        let n = rng.gen_range(3..=8);
        let rows: Vec<Vec<i64>> = (0..2)
            .map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect())
            .collect();
        let sys = DiophantineSystem::from_i64_rows(n, &rows).map_err(fail)?;
        check_hilbert(&sys, &format!("random system #{round} {rows:?}"))?;
    }
    Ok(())
}

fn main() {
    let checks: [Criterion; 8] = [
        (
            "1 five-generator ideal, G1 and G3",
            criterion1,
            Duration::from_secs(10),
        ),
        (
            "2 pair generator vs oracle minimal relation",
            criterion2,
            Duration::from_secs(30),
        ),
        (
            "3 five-generator lattice, equations, Hilbert basis, elasticity",
            criterion3,
            Duration::from_secs(60),
        ),
        (
            "4 grid semigroup elasticity and acceptability",
            criterion4,
            Duration::from_secs(5),
        ),
        (
            "5 powers of z2 and closed formula",
            criterion5,
            Duration::from_secs(60),
        ),
        (
            "6 non-cancellativity and torsion witnesses",
            criterion6,
            Duration::from_secs(60),
        ),
        (
            "7 random specs against the relation oracle",
            criterion7,
            Duration::from_secs(600),
        ),
        (
            "8 Hilbert basis minimality and completeness",
            criterion8,
            Duration::from_secs(600),
        ),
    ];
    let mut failed = 0;
    for (name, check, limit) in checks {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= limit, || {
                format!("took {elapsed:.2?}, limit {limit:?}")
            })
        });
        match outcome {
            Ok(()) => println!("PASS criterion {name} ({elapsed:.2?})"),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {name} ({elapsed:.2?}): {e}");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
