//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the report is always printed.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use qknot_core::braid::parse_braid;
use qknot_core::homfly::{homfly, rt_invariant};
use qknot_core::qnum::{
    left_approach, left_qdelta, left_qrational, nested_formula, even_cf, parse_rational, q_adic_limit, qbinomial,
    qrational, qrational_by_recursion,
};
use qknot_core::table::{collision_report, KnotTable, Mode};
use qknot_core::xinv::{normalized_invariant, numeric_sweep, verify_uniqueness_constraint, x_invariant, XContext};
use qknot_core::{exactalg::series_expand, BigRational, BraidWord, LaurentPoly, NuValue, RatFun, RatFun2, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome);

fn r(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

fn lp(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn braid(s: &str) -> BraidWord {
    parse_braid(s, None).unwrap()
}

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let n: i64 = rng.gen_range(-1000..=1000);
    let d: i64 = rng.gen_range(1..=1000);
    Rational::new(n.into(), d.into())
}

fn random_word(rng: &mut ChaCha8Rng, max_len: usize, max_strands: usize) -> BraidWord {
    let strands = rng.gen_range(2..=max_strands);
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands) as i32;
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(letters, strands).unwrap()
}

fn c1_identities() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let one = RatFun::one();
    for _ in 0..200 {
        let x = random_rational(&mut rng);
        let fx = qrational(&x);
        let shifted = qrational(&(&x + Rational::one()));
        check(shifted == &fx.shift_by(2) + &one, format!("shift identity fails at {x}"))?;
        let y = if x.is_zero() { Rational::one() } else { num_traits::Signed::abs(&x) };
        let inv = qrational(&y.recip());
        check(inv == qrational(&y).invert_q().inv().unwrap(), format!("inversion identity fails at {y}"))?;
    }
    let t = start.elapsed();
    check(t < Duration::from_secs(10), format!("took {t:.2?}"))?;
    Ok(format!("200 random rationals, {t:.2?}"))
}

fn c2_classical_limit() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..100 {
        let x = random_rational(&mut rng);
        let v = qrational(&x).eval(&BigRational::one()).map_err(|e| format!("{x}: {e}"))?;
        check(v == x, format!("{{{x}}} at q = 1 gives {v}"))?;
    }
    Ok("100 random rationals".into())
}

/// Gaussian binomials from the q-Pascal rule `[n,k] = [n−1,k−1] + q^{2k}[n−1,k]`.
fn pascal(n: usize) -> Vec<Vec<LaurentPoly>> {
    let mut rows = vec![vec![LaurentPoly::one()]];
    for m in 1..=n {
        let prev = &rows[m - 1];
        let mut row = vec![LaurentPoly::one(); m + 1];
        for k in 1..m {
            row[k] = &prev[k - 1] + &prev[k].shift_by(2 * k as i64);
        }
        rows.push(row);
    }
    rows
}

fn c3_regressions() -> Outcome {
    let q2m1 = lp("-1+q^2");
    for n in -20i64..=20 {
        let closed = RatFun::new(&LaurentPoly::q_pow(2 * n) - &LaurentPoly::one(), q2m1.clone()).unwrap();
        check(qrational(&Rational::from_integer(n.into())) == closed, format!("{{{n}}}"))?;
    }
    check(qrational(&r("-2")) == qrational(&r("2")).shift_by(-4).scale_poly(&lp("-1")), "{-2} = -q^-4{2}")?;
    let five_halves: RatFun = "(1+2*q^2+q^4+q^6)/(1+q^2)".parse().unwrap();
    let nested = nested_formula(&even_cf(&r("5/2")));
    check(nested == five_halves, "{5/2} nested formula")?;
    check(qrational_by_recursion(&r("5/2")) == five_halves, "{5/2} recursion chain")?;
    let table = pascal(12);
    for (n, row) in table.iter().enumerate() {
        for (k, g) in row.iter().enumerate() {
            let b = qbinomial(&Rational::from_integer(n.into()), k as u32);
            check(b == RatFun::from_poly(g.clone()), format!("qbinomial({n}, {k})"))?;
        }
    }
    Ok("integers |n| ≤ 20, {-2}, {5/2}, Gaussian binomials n ≤ 12".into())
}

fn c4_skein_markov() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let qm1 = RatFun2::monomial(1, 0, -1);
    let q1 = RatFun2::monomial(1, 0, 1);
    let plus = RatFun2::monomial(1, -1, 1); // q a⁻¹
    let minus = RatFun2::monomial(1, 1, -1); // q⁻¹ a
    for _ in 0..100 {
        // skein at a random position
        let u = random_word(&mut rng, 4, 4);
        let n = u.strands();
        let v = BraidWord::new(random_word(&mut rng, 4, n).letters().to_vec(), n).unwrap();
        let i = rng.gen_range(1..n) as i32;
        let join = |mid: &[i32]| {
            let mut l = u.letters().to_vec();
            l.extend_from_slice(mid);
            l.extend_from_slice(v.letters());
            BraidWord::new(l, n).unwrap()
        };
        let lhs = &(&qm1 * &homfly(&join(&[i]))) - &(&q1 * &homfly(&join(&[-i])));
        let rhs = &(&qm1 - &q1) * &homfly(&join(&[]));
        check(lhs == rhs, format!("skein fails for {u} | {i} | {v}"))?;
        // conjugation
        check(homfly(&u.concat(&v)) == homfly(&v.concat(&u)), format!("conjugation fails for {u} / {v}"))?;
        // framed stabilization
        let w = random_word(&mut rng, 6, 4);
        let m = w.strands() as i32;
        let up = |s: i32| {
            let mut l = w.letters().to_vec();
            l.push(s * m);
            BraidWord::new(l, w.strands() + 1).unwrap()
        };
        let h = homfly(&w);
        check(homfly(&up(1)) == &h * &plus, format!("positive stabilization fails for {w}"))?;
        check(homfly(&up(-1)) == &h * &minus, format!("negative stabilization fails for {w}"))?;
        // free cancellation and braid relation
        check(homfly(&join(&[i, -i])) == homfly(&join(&[])), "free cancellation")?;
        if n >= 3 {
            let j = rng.gen_range(1..n as i32 - 1);
            check(homfly(&join(&[j, j + 1, j])) == homfly(&join(&[j + 1, j, j + 1])), "braid relation")?;
        } else {
            let w3 = BraidWord::new(join(&[]).letters().to_vec(), 3).unwrap();
            let mut a = w3.letters().to_vec();
            let mut b = a.clone();
            a.extend([1, 2, 1]);
            b.extend([2, 1, 2]);
            check(
                homfly(&BraidWord::new(a, 3).unwrap()) == homfly(&BraidWord::new(b, 3).unwrap()),
                "braid relation",
            )?;
        }
    }
    let t = start.elapsed();
    check(t < Duration::from_secs(120), format!("took {t:.2?}"))?;
    Ok(format!("100 instances each; σ⁺ curl q·a⁻¹, σ⁻ curl q⁻¹·a; {t:.2?}"))
}

fn all_words(len: usize, gens: &[i32]) -> Vec<Vec<i32>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &layer {
            for &g in gens {
                let mut w2: Vec<i32> = w.clone();
                w2.push(g);
                next.push(w2);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn c5_oracle() -> Outcome {
    use rayon::prelude::*;
    let start = Instant::now();
    let words = all_words(6, &[1, -1, 2, -2]);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut cases: Vec<BraidWord> = words.into_iter().map(|l| BraidWord::new(l, 3).unwrap()).collect();
    let exhaustive = cases.len();
    cases.extend((0..50).map(|_| random_word(&mut rng, 8, 4)));
    let bad: Vec<String> = cases
        .par_iter()
        .filter_map(|w| {
            let h = homfly(w);
            for n in [2usize, 3] {
                if h.substitute_a(n as i64).ok()? != rt_invariant(w, n) {
                    return Some(format!("{w} on {} strands at n = {n}", w.strands()));
                }
            }
            None
        })
        .collect();
    check(bad.is_empty(), format!("mismatches: {:?}", &bad[..bad.len().min(5)]))?;
    let t = start.elapsed();
    check(t < Duration::from_secs(600), format!("took {t:.2?}"))?;
    Ok(format!("{exhaustive} exhaustive + 50 random words, n ∈ {{2,3}}, {t:.2?}"))
}

fn c6_stabilized_unknot() -> Outcome {
    // the stabilized unknot is the closure of σ₁⁻¹ in this crossing convention
    let w = braid("-1");
    let expect: RatFun2 = "(a^2-1)/(q^2-1)".parse().unwrap();
    check(homfly(&w) == expect, format!("homfly = {}", homfly(&w)))?;
    for x in ["2", "3", "1/2", "2/3", "5/2"] {
        let ctx = XContext::right(r(x));
        let v = x_invariant(&w, &ctx).map_err(|e| e.to_string())?;
        check(v.value == NuValue::from_even(qrational(&r(x)), ctx.delta()), format!("x = {x}"))?;
    }
    for n in [2i64, 3] {
        let qn = RatFun::from_poly(LaurentPoly::qint(n));
        let v = x_invariant(&w, &XContext::right(Rational::from_integer(n.into()))).unwrap();
        check(v.value.even() == &qn, format!("x = {n} is not {{{n}}}"))?;
        check(rt_invariant(&w, n as usize) == qn, format!("gl_{n} value is not {{{n}}}"))?;
    }
    Ok("closure of σ₁⁻¹ gives (a²−1)/(q²−1) and {x} for x ∈ {2, 3, 1/2, 2/3, 5/2}".into())
}

fn trefoil_formula(ctx: &XContext) -> NuValue {
    let x = ctx.qnum(0);
    let x1 = ctx.qnum(1);
    let inner = &RatFun::q_pow(4) + &(&RatFun::from_poly(lp("1-q^2")) * &x1);
    NuValue::from_even((&x * &inner).checked_div(ctx.delta()).unwrap(), ctx.delta())
}

fn c7_trefoil() -> Outcome {
    let w = braid("1 1 1");
    for x in ["2", "3", "1/2", "2/3", "5/2", "-1"] {
        let ctx = XContext::right(r(x));
        let v = x_invariant(&w, &ctx).map_err(|e| e.to_string())?;
        check(v.value == trefoil_formula(&ctx), format!("x = {x}: got {}", v.value))?;
    }
    let ctx = XContext::right(r("2"));
    let raw = x_invariant(&w, &ctx).unwrap();
    let framed = RatFun::from_poly(&lp("q^-2+1") * &lp("1+q^4-q^6"));
    check(raw.value.even() == &framed, format!("framed value {}", raw.value))?;
    let unknot = normalized_invariant(&parse_braid("", Some(1)).unwrap(), &ctx).unwrap();
    let jones = normalized_invariant(&w, &ctx).unwrap().checked_div(&unknot).unwrap();
    check(jones == RatFun::from_poly(lp("q^2+q^6-q^8")), format!("Jones = {jones}"))?;
    Ok("six x values; at x = 2 the normalized value over the unknot is t + t³ − t⁴, t = q²".into())
}

fn c8_chirality() -> Outcome {
    let ctx = XContext::right(r("2/3"));
    let k = x_invariant(&braid("1 1 1"), &ctx).unwrap();
    let m = x_invariant(&braid("-1 -1 -1"), &ctx).unwrap();
    check(k.value != m.value, "trefoil and mirror agree at x = 2/3")?;
    check(k.value == trefoil_formula(&ctx), "closed form")?;
    let printed_num = lp("q^4+q^6+2*q^8+2*q^10");
    let printed_den = lp("1+q^2+q^4+2*q^6+2*q^8+q^10");
    let printed = RatFun::new(printed_num.clone(), printed_den.clone()).unwrap();
    let even = k.value.even();
    let outcome = if even == &printed {
        "matches the printed fraction".to_string()
    } else if even.num() == &printed_num {
        format!("numerator matches the printed one; denominator {} vs printed {}", even.den(), printed_den)
    } else {
        format!("computed {even} vs printed {printed}")
    };
    Ok(format!("values differ; comparison: {outcome}"))
}

fn c9_left() -> Outcome {
    for x in ["1", "2", "3", "5/2", "2/3"] {
        let x = r(x);
        let lim = q_adic_limit(left_approach(&x), 20).map_err(|e| format!("{x}: {e}"))?;
        check(series_expand(&left_qrational(&x), 20) == lim, format!("x = {x}"))?;
    }
    check(left_qdelta(&r("2")) == RatFun::from_poly(lp("1-q^2+q^4")), "δ₂ flat")?;
    Ok("x ∈ {1, 2, 3, 5/2, 2/3} to order 20; δ₂^♭ = 1 − q² + q⁴".into())
}

fn table_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/knots_le10.csv")
}

fn c10_flat() -> Outcome {
    let x = r("2");
    let ctx = XContext::flat(x.clone());
    let k = normalized_invariant(&braid("1 1 1"), &ctx).unwrap();
    let m = normalized_invariant(&braid("-1 -1 -1"), &ctx).unwrap();
    check(k != m, "flat invariant at 2 does not separate the trefoil from its mirror")?;
    let path = table_path();
    if !path.exists() {
        return Ok(format!("trefoil chirality detected; table part SKIPPED (no {})", path.display()));
    }
    let table = KnotTable::load(&path).map_err(|e| e.to_string())?.with_mirrors();
    let flat = collision_report(&table, &Mode::Flat(x), true);
    let homfly = collision_report(&table, &Mode::Homfly, true);
    for (a, b) in [("5_1", "10_132"), ("10_25", "10_56")] {
        let hit = [b.to_string(), format!("{b}!")].into_iter().find(|b| flat.same_group(a, b));
        let b = hit.ok_or_else(|| format!("{a} and {b} have different flat invariants"))?;
        check(homfly.same_group(a, &b), format!("{a} and {b} have different HOMFLY-PT"))?;
    }
    Ok("trefoil chirality detected; 5_1 ~ 10_132 and 10_25 ~ 10_56 confirmed on the supplied table".into())
}

fn c11_uniqueness() -> Outcome {
    let start = Instant::now();
    let got = verify_uniqueness_constraint(-6..=6);
    let t = start.elapsed();
    check(got == BTreeSet::from([(0, -1)]), format!("got {got:?}"))?;
    check(t < Duration::from_secs(1), format!("took {t:.2?}"))?;
    Ok(format!("{{(0, -1)}} in {t:.2?}"))
}

fn c12_sweep() -> Outcome {
    let q0 = BigRational::from_integer(2.into());
    let w = braid("-1");
    let xs: Vec<Rational> = ["0", "1/4", "1/2", "3/4", "1"].iter().map(|s| r(s)).collect();
    let rows = numeric_sweep(&w, &q0, &xs, false);
    let mut got = Vec::new();
    for row in &rows {
        let (v, _) = row.result.clone().map_err(|e| format!("x = {}: {e}", row.x))?;
        let direct = qrational(&row.x).eval(&q0).unwrap();
        check(v == direct, format!("x = {}: sweep {v} vs direct {direct}", row.x))?;
        got.push(v);
    }
    let expect = [r("0"), r("64/85"), r("4/5"), r("84/85"), r("1")];
    check(got == expect, format!("values {got:?}"))?;
    // monotone on a Farey grid, with jumps just to the right of rationals
    let grid: BTreeSet<Rational> =
        (1..=12i64).flat_map(|d| (0..=d).map(move |n| Rational::new(n.into(), d.into()))).collect();
    let grid: Vec<Rational> = grid.into_iter().collect();
    let vals: Vec<_> = numeric_sweep(&w, &q0, &grid, false).into_iter().map(|row| row.result.unwrap().0).collect();
    check(vals.windows(2).all(|p| p[0] < p[1]), "not monotone")?;
    let eps = Rational::new(1.into(), 1000.into());
    let half = r("1/2");
    let near = numeric_sweep(&w, &q0, &[&half - &eps, half.clone(), &half + &eps], false);
    let v: Vec<_> = near.into_iter().map(|row| row.result.unwrap().0).collect();
    let jump = &v[2] - &v[1];
    check(jump > r("1/10"), "no jump at 1/2")?;
    Ok(format!(
        "values 0, 64/85, 4/5, 84/85, 1; monotone on {} grid points; jump {:.3} just right of x = 1/2",
        grid.len(),
        num_traits::ToPrimitive::to_f64(&jump).unwrap()
    ))
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        (1, "q-rational shift and inversion identities", c1_identities),
        (2, "classical limit q -> 1", c2_classical_limit),
        (3, "q-rational value regressions", c3_regressions),
        (4, "skein and Markov moves", c4_skein_markov),
        (5, "Hecke trace vs gl_n R-matrix oracle", c5_oracle),
        (6, "stabilized unknot", c6_stabilized_unknot),
        (7, "trefoil closed form", c7_trefoil),
        (8, "x = 2/3 chirality", c8_chirality),
        (9, "left q-rationals vs q-adic limits", c9_left),
        (10, "flat invariant at x = 2", c10_flat),
        (11, "uniqueness constraint", c11_uniqueness),
        (12, "sweep of the stabilized unknot at q = 2", c12_sweep),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (n, name, f) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {n:>2} PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {n:>2} FAIL  {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
