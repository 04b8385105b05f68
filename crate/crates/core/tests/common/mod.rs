//! Shared corpus and oracles for the integration tests.
#![allow(dead_code)]

use logderiv::poly::{rat, ratio};
use logderiv::{Arrangement, BivariatePoly, Builtin, Line, Rational, VectorField};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_rational(r: &mut ChaCha8Rng) -> Rational {
    let n = r.gen_range(-4i64..=4);
    let d = if r.gen_bool(0.25) {
        r.gen_range(2i64..=3)
    } else {
        1
    };
    ratio(n, d)
}

/// A random arrangement of at most `max_n` lines. Lines are drawn through
/// earlier intersection points or parallel to earlier lines often enough to
/// produce higher multiplicities and parallel classes.
pub fn random_arrangement(r: &mut ChaCha8Rng, max_n: usize) -> Arrangement {
    let n = r.gen_range(1..=max_n);
    let mut lines: Vec<Line> = Vec::new();
    let mut attempts = 0;
    while lines.len() < n && attempts < 200 {
        attempts += 1;
        let choice = r.gen_range(0..4);
        let line = if choice == 0 && lines.len() >= 2 {
            let i = r.gen_range(0..lines.len());
            let j = r.gen_range(0..lines.len());
            let Some((px, py)) = lines[i].intersect(&lines[j]) else {
                continue;
            };
            let (a, b) = (rat(r.gen_range(-3..=3)), rat(r.gen_range(-3..=3)));
            let c = -(&a * &px + &b * &py);
            Line::new(&a, &b, &c)
        } else if choice == 1 && !lines.is_empty() {
            let base = &lines[r.gen_range(0..lines.len())];
            let (a, b, _) = base.coefficients();
            Line::new(&a, &b, &small_rational(r))
        } else {
            Line::new(&small_rational(r), &small_rational(r), &small_rational(r))
        };
        if let Some(l) = line {
            if !lines.contains(&l) {
                lines.push(l);
            }
        }
    }
    Arrangement::new(lines).expect("nonempty distinct lines")
}

/// Built-ins, a few hand-made arrangements, and `random` seeded random ones.
pub fn corpus(random: usize, seed: u64) -> Vec<(String, Arrangement)> {
    let mut out: Vec<(String, Arrangement)> = Builtin::ALL
        .iter()
        .map(|b| (b.to_string(), b.arrangement()))
        .collect();
    type Triples = &'static [(i64, i64, i64)];
    let fixed: [(&str, Triples); 5] = [
        ("pencil", &[(1, 0, 0), (0, 1, 0), (1, -1, 0)]),
        ("parallels", &[(1, 0, 0), (1, 0, -1), (1, 0, -2)]),
        ("single", &[(1, 2, 3)]),
        ("triangle", &[(1, 0, 0), (0, 1, 0), (1, 1, -1)]),
        (
            "grid",
            &[(1, 0, 0), (1, 0, -1), (0, 1, 0), (0, 1, -1), (1, -1, 0)],
        ),
    ];
    for (name, t) in fixed {
        out.push((name.to_string(), Arrangement::from_triples(t)));
    }
    let mut r = rng(seed);
    for k in 0..random {
        out.push((format!("random{k}"), random_arrangement(&mut r, 6)));
    }
    out
}

/// Invariance oracle independent of the restriction and division code:
/// `αP + βQ` has degree at most `deg χ`, so it vanishes on the line iff it
/// vanishes at `deg χ + 1` distinct points of it.
pub fn fixes_line(chi: &VectorField, l: &Line) -> bool {
    let (a, b, _) = l.coefficients();
    let form = &chi.p.scale(&a) + &chi.q.scale(&b);
    let (x0, y0) = l.base_point();
    let (vx, vy) = l.direction();
    let (vx, vy) = (Rational::from_integer(vx), Rational::from_integer(vy));
    let d = chi.degree().unwrap_or(0);
    (0..=d as i64).all(|k| {
        let t = rat(k);
        form.eval(&(&x0 + &t * &vx), &(&y0 + &t * &vy)) == Rational::default()
    })
}

pub fn fixes_all(chi: &VectorField, a: &Arrangement) -> bool {
    a.lines().iter().all(|l| fixes_line(chi, l))
}

pub fn random_poly(r: &mut ChaCha8Rng, d: u32, density: f64) -> BivariatePoly {
    let mut terms = Vec::new();
    for i in 0..=d {
        for j in 0..=d - i {
            if r.gen_bool(density) {
                terms.push((i, j, small_rational(r)));
            }
        }
    }
    BivariatePoly::from_terms(terms)
}

pub fn random_coeffs(r: &mut ChaCha8Rng, k: usize) -> Vec<Rational> {
    (0..k).map(|_| small_rational(r)).collect()
}
