//! Acceptance suite: one test per criterion, each printing a pass line and
//! enforcing its runtime budget (visible with `cargo test --test acceptance
//! -- --nocapture`).

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use derivkit::derivpolys::{
    alternating_from_derivative, alternating_pairs, convolution_pairs, derivative_pairs,
    expand_p_in_q,
};
use derivkit::emit::{poly_csv, poly_from_json, poly_json, poly_latex};
use derivkit::eulerian::{
    chebyshev, chebyshev_recurrence_table, eulerian_a_table, eulerian_b_table, eulerian_mass,
    frobenius_a, frobenius_b, gamma_vector, ChebKind, GammaKind,
};
use derivkit::exactmath::{binomial_row, rat, rat_big, rat_int, DensePoly, Rational};
use derivkit::oracles;
use derivkit::sequences::{bernoulli_numbers, euler_numbers, springer_numbers};
use derivkit::verify::verify;

fn finish(criterion: u32, name: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    println!("ACCEPTANCE {criterion} ({name}): PASS in {elapsed:.2?} (budget {budget:?})");
    assert!(
        elapsed <= budget,
        "criterion {criterion} exceeded its budget: {elapsed:?} > {budget:?}"
    );
}

fn assert_verified(name: &str, lo: u32, hi: u32) {
    let report = verify(name, Some((lo, hi))).unwrap();
    assert!(
        report.passed(),
        "{name} failed on {:?}",
        report.failures.iter().map(|f| f.index).collect::<Vec<_>>()
    );
}

#[test]
fn criterion_01_low_order_table() {
    let expected_p: [&[i64]; 6] = [
        &[0, 1],
        &[1, 0, 1],
        &[0, 2, 0, 2],
        &[2, 0, 8, 0, 6],
        &[0, 16, 0, 40, 0, 24],
        &[16, 0, 136, 0, 240, 0, 120],
    ];
    let expected_q: [&[i64]; 6] = [
        &[1],
        &[0, 1],
        &[1, 0, 2],
        &[0, 5, 0, 6],
        &[5, 0, 28, 0, 24],
        &[0, 61, 0, 180, 0, 120],
    ];
    let start = Instant::now();
    let pairs = derivative_pairs(5);
    for k in 0..=5 {
        assert_eq!(pairs[k].p, DensePoly::from_ints(expected_p[k]), "P_{k}");
        assert_eq!(pairs[k].q, DensePoly::from_ints(expected_q[k]), "Q_{k}");
    }
    finish(1, "low-order table", start, Duration::from_millis(1));

    // the CLI output path renders the same table coefficient-for-coefficient
    assert_eq!(poly_latex(&pairs[3].q), "5x+6x^3");
    assert_eq!(poly_latex(&pairs[5].p), "16+136x^2+240x^4+120x^6");
    assert_eq!(poly_csv(&pairs[0].p), "0/1\n1/1\n");
    assert_eq!(
        poly_json("Q", 2, &pairs[2].q),
        r#"{"name":"Q","index":2,"coeffs":["1/1","0/1","2/1"]}"#
    );
}

#[test]
fn criterion_02_secant_in_tangent_basis() {
    let start = Instant::now();
    assert_verified("eq01", 0, 25); // Q-indices 0, 2, …, 50
    assert_verified("eq02", 0, 24); // Q-indices 1, 3, …, 49
    finish(2, "Q in P basis", start, Duration::from_secs(10));
}

#[test]
fn criterion_03_tangent_alternating_sums() {
    let start = Instant::now();
    assert_verified("eq03", 0, 50);
    assert_verified("eq04", 0, 50);
    // worked reduction at m = 1: P_2 − P_0 − 2x·P_1 = −x
    let pairs = derivative_pairs(2);
    let x = DensePoly::x();
    let lhs = &(&pairs[2].p - &pairs[0].p) - &(&x * &pairs[1].p).scaled(&rat_int(2));
    assert_eq!(lhs, x.scaled(&rat_int(-1)));
    finish(
        3,
        "alternating tangent sums",
        start,
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_04_tangent_in_secant_basis() {
    let start = Instant::now();
    assert_verified("thm28_even", 0, 15); // P-indices 0, 2, …, 30
    assert_verified("thm28_odd", 0, 14); // P-indices 1, 3, …, 29

    // worked expansions: 5·P_4 = Q_5 + (20/6)·Q_3 + (7/3)·Q_1
    let e4 = expand_p_in_q(4);
    let expected: BTreeMap<i64, Rational> =
        [(5, rat(1, 5)), (3, rat(2, 3)), (1, rat(7, 15))].into();
    assert_eq!(e4.coords, expected);
    let scaled: BTreeMap<i64, Rational> = e4
        .coords
        .iter()
        .map(|(&i, c)| (i, c * rat_int(5)))
        .collect();
    assert_eq!(
        scaled,
        [(5, rat_int(1)), (3, rat(10, 3)), (1, rat(7, 3))].into()
    );
    let pairs = derivative_pairs(6);
    assert_eq!(e4.reconstruct(), pairs[4].p);

    // 6·P_5 = Q_6 + 5·Q_4 + 7·Q_2 + 3·Q_0
    let e5 = expand_p_in_q(5);
    let scaled: BTreeMap<i64, Rational> = e5
        .coords
        .iter()
        .map(|(&i, c)| (i, c * rat_int(6)))
        .collect();
    assert_eq!(
        scaled,
        [
            (6, rat_int(1)),
            (4, rat_int(5)),
            (2, rat_int(7)),
            (0, rat_int(3))
        ]
        .into()
    );
    assert_eq!(e5.reconstruct(), pairs[5].p);
    finish(4, "P in Q basis", start, Duration::from_secs(10));
}

#[test]
fn criterion_05_number_corollaries() {
    let start = Instant::now();
    assert_verified("cor_euler_alternating", 0, 100);
    assert_verified("cor_euler_2pow", 0, 60);
    assert_verified("cor_springer_bernoulli", 0, 30);
    assert_verified("cor_euler_recurrence", 0, 30);

    // the Euler recurrence right side is exactly integral despite the
    // rational Bernoulli intermediates
    let euler = euler_numbers(64);
    let bern = bernoulli_numbers(64);
    for n in 0..=30usize {
        let row = binomial_row(2 * n + 2);
        let mut rhs = rat_big(BigInt::from(2 * n as i64 + 2) * &euler[2 * n + 1]);
        for i in 0..=n {
            let four_pow = BigInt::from(4).pow((i + 1) as u32);
            let mut w = rat_big(&row[2 * i + 2] * (four_pow - BigInt::from(2))) * &bern[2 * i + 2];
            if i % 2 == 1 {
                w = -w;
            }
            rhs -= w * rat_big(euler[2 * n - 2 * i].clone());
        }
        let mut tail = rat_big(BigInt::from(4).pow((n + 1) as u32)) * &bern[2 * n + 2];
        if n % 2 == 0 {
            tail = -tail;
        }
        rhs += tail;
        assert!(rhs.is_integer(), "n = {n}: rhs = {rhs}");
        assert_eq!(rhs.to_integer(), euler[2 * n + 2], "n = {n}");
    }
    finish(5, "number corollaries", start, Duration::from_secs(20));
}

#[test]
fn criterion_06_special_values() {
    let start = Instant::now();
    assert_verified("pn1_hoffman", 0, 60);
    assert_verified("qn1_hoffman", 0, 60);
    finish(
        6,
        "special values at 0 and 1",
        start,
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_07_construction_equivalence() {
    let start = Instant::now();
    let rec = derivative_pairs(60);
    let conv = convolution_pairs(60);
    for n in 0..=60 {
        assert_eq!(rec[n].p, conv[n].p, "P_{n}");
        assert_eq!(rec[n].q, conv[n].q, "Q_{n}");
    }
    let alts = alternating_pairs(40);
    for n in 1..=40 {
        let twist = alternating_from_derivative(&rec[n]);
        assert_eq!(twist.p, alts[n].p, "sign twist p_{n}");
        assert_eq!(twist.q, alts[n].q, "sign twist q_{n}");
    }
    assert_verified("thm32", 1, 40);
    assert_verified("cor_stirling_form", 1, 40);
    assert_verified("cor_gamma_form", 1, 40);
    finish(
        7,
        "construction equivalence",
        start,
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_08_eulerian_layer() {
    let start = Instant::now();
    let a = eulerian_a_table(40);
    let b = eulerian_b_table(40);
    for n in 1..=40 {
        assert_eq!(frobenius_a(n).unwrap(), a[n], "A_{n}");
    }
    for (n, expected) in b.iter().enumerate() {
        assert_eq!(&frobenius_b(n), expected, "B_{n}");
    }
    let one = rat_int(1);
    for n in 1..=40 {
        let ga = gamma_vector(GammaKind::TypeA, n).unwrap();
        assert_eq!(ga.reconstruct(), a[n], "gamma A_{n}");
        let gb = gamma_vector(GammaKind::TypeB, n).unwrap();
        assert_eq!(gb.reconstruct(), b[n], "gamma B_{n}");
        // entries are nonnegative by construction (BigInt), so just check
        // there is no silent sign loss
        assert!(ga.gamma.iter().all(|g| g.sign() != Sign::Minus));
        assert!(gb.gamma.iter().all(|g| g.sign() != Sign::Minus));
    }
    for n in 0..=40 {
        let (a_mass, b_mass) = eulerian_mass(n);
        assert_eq!(a[n].eval(&one), a_mass, "A_{n}(1)");
        assert_eq!(b[n].eval(&one), b_mass, "B_{n}(1)");
    }
    finish(8, "Eulerian layer", start, Duration::from_secs(20));
}

#[test]
fn criterion_09_oracle_equivalence() {
    let start = Instant::now();
    let euler = euler_numbers(11);
    for n in 0..=10usize {
        let count = oracles::count_alternating(n).unwrap();
        assert_eq!(BigInt::from(count), euler[n], "E_{n}");
    }
    let a = eulerian_a_table(8);
    for (n, expected) in a.iter().enumerate() {
        assert_eq!(&oracles::descent_polynomial(n).unwrap(), expected, "A_{n}");
    }
    let b = eulerian_b_table(7);
    for (n, expected) in b.iter().enumerate() {
        assert_eq!(
            &oracles::type_b_descent_polynomial(n).unwrap(),
            expected,
            "B_{n}"
        );
    }
    let springer = springer_numbers(8);
    for n in 0..=7usize {
        let count = oracles::count_snakes(n).unwrap();
        assert_eq!(BigInt::from(count), springer[n], "s_{n}");
    }
    for n in 1..=8usize {
        let peaks = oracles::peak_no_dd_histogram(n).unwrap();
        let as_big: BTreeMap<usize, BigInt> = peaks
            .histogram
            .iter()
            .map(|(&k, &c)| (k, BigInt::from(c)))
            .collect();
        let gamma = gamma_vector(GammaKind::TypeA, n).unwrap();
        assert_eq!(as_big, gamma.histogram(), "a({n},k)");

        let left = oracles::left_peak_histogram(n).unwrap();
        let as_big: BTreeMap<usize, BigInt> = left
            .histogram
            .iter()
            .map(|(&k, &c)| (k, BigInt::from(c)))
            .collect();
        let gamma = gamma_vector(GammaKind::TypeB, n).unwrap();
        assert_eq!(as_big, gamma.histogram(), "b({n},k)");
    }
    finish(9, "oracle equivalence", start, Duration::from_secs(180));
}

#[test]
fn criterion_10_chebyshev() {
    let start = Instant::now();
    let t = chebyshev_recurrence_table(ChebKind::T, 50);
    let u = chebyshev_recurrence_table(ChebKind::U, 50);
    let two = rat_int(2);
    for n in 0..=50 {
        assert_eq!(chebyshev(ChebKind::T, n), t[n], "T_{n}");
        assert_eq!(chebyshev(ChebKind::U, n), u[n], "U_{n}");
        if n >= 2 {
            assert_eq!(&u[n] - &u[n - 2], t[n].scaled(&two), "duality at {n}");
        }
    }
    assert_verified("chebyshev_duality", 0, 50);
    finish(
        10,
        "Chebyshev sums and duality",
        start,
        Duration::from_secs(2),
    );
}

#[test]
fn criterion_11_serialization_round_trip() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x5eed_cafe);
    let big = |rng: &mut StdRng| -> BigInt {
        let bytes: [u8; 32] = rng.r#gen();
        let sign = if rng.r#gen::<bool>() {
            Sign::Plus
        } else {
            Sign::Minus
        };
        BigInt::from_bytes_le(sign, &bytes)
    };
    for case in 0..200 {
        let degree = rng.gen_range(0..=32usize);
        let coeffs: Vec<Rational> = (0..=degree)
            .map(|_| {
                let numer = big(&mut rng);
                let mut denom = big(&mut rng);
                if denom.is_zero() {
                    denom = BigInt::one();
                }
                Rational::new(numer, denom)
            })
            .collect();
        let poly = DensePoly::from_coeffs(coeffs);
        let encoded = poly_json("poly", case, &poly);
        assert_eq!(poly_from_json(&encoded).unwrap(), poly, "case {case}");
    }
    finish(
        11,
        "serialization round trip",
        start,
        Duration::from_secs(2),
    );
}
