//! Exact checks against independent brute-force or closed-form oracles.

use std::collections::BTreeMap;
use std::sync::Arc;

use hypoh_core::bivar::{square_classes_independent, squarefree_part, sym_discriminant, RPoly};
use hypoh_core::census::{correlation_mode, run_census, swan_mode, CensusSpec};
use hypoh_core::disc::{berlekamp_element, disc_class_odd};
use hypoh_core::poly::count_monic_irreducible;
use hypoh_core::wreath::{count_transitive, predict_density, OrbitSetup};
use hypoh_core::{FactType, Field, FieldElem, Poly};
use num_rational::Ratio;

/// Every monic polynomial of degree `n`, coefficients low-to-high.
fn monics(f: &Arc<Field>, n: usize) -> Vec<Poly> {
    let elems: Vec<FieldElem> = f.elements().collect();
    let q = elems.len();
    let mut out = Vec::new();
    for mut i in 0..q.pow(n as u32) {
        let mut c = Vec::with_capacity(n + 1);
        for _ in 0..n {
            c.push(elems[i % q]);
            i /= q;
        }
        c.push(f.one());
        out.push(Poly::new(f, c).unwrap());
    }
    out
}

#[test]
fn irreducible_counts_match_brute_force() {
    for (p, k, max_n) in [(2, 1, 6), (3, 1, 4), (2, 2, 4), (5, 1, 3), (7, 1, 3)] {
        let f = Field::new(p, k).unwrap();
        for n in 1..=max_n {
            let brute = monics(&f, n)
                .iter()
                .filter(|h| h.is_irreducible().unwrap())
                .count() as u128;
            assert_eq!(
                count_monic_irreducible(f.order(), n as u32).unwrap(),
                brute,
                "q={} n={n}",
                f.order()
            );
        }
    }
}

#[test]
fn census_hits_match_brute_force() {
    for (p, k) in [(3, 1), (2, 2), (5, 1)] {
        let f = Field::new(p, k).unwrap();
        let mut outers = vec![Poly::x(&f)];
        outers.extend(
            monics(&f, 2)
                .into_iter()
                .filter(|h| h.is_irreducible().unwrap())
                .take(1),
        );
        for n in 2..=3 {
            for outer in &outers {
                let spec = CensusSpec::new(&f, n, vec![outer.clone()]);
                let rep = run_census(&spec).unwrap();
                let mut hits = 0;
                let mut inseparable = 0;
                let mut hist: BTreeMap<FactType, u64> = BTreeMap::new();
                for g in monics(&f, n) {
                    let h = outer.compose(&g).unwrap();
                    if !h.is_separable() {
                        inseparable += 1;
                        continue;
                    }
                    if h.is_irreducible().unwrap() {
                        hits += 1;
                    }
                    *hist.entry(h.fact_type().unwrap()).or_insert(0) += 1;
                }
                assert_eq!(rep.hits, hits, "q={} n={n} f={outer}", f.order());
                assert_eq!(rep.inseparable, inseparable);
                for row in rep.histogram.iter().filter(|r| r.count > 0) {
                    assert_eq!(hist.get(&row.types[0]).copied(), Some(row.count));
                }
            }
        }
    }
}

#[test]
fn x_to_the_n_minus_t_discriminants() {
    // Disc(X^n + c) = (-1)^(n(n-1)/2) n^n c^(n-1) with c = -T
    for (p, n) in [(5u64, 2usize), (5, 4), (7, 4), (3, 4), (7, 3), (11, 5)] {
        let f = Field::new(p, 1).unwrap();
        let h = RPoly::parse(&f, &format!("X^{n} - T")).unwrap();
        let sign: i64 = if (n * (n - 1) / 2) % 2 == 1 { -1 } else { 1 };
        let c_sign: i64 = if (n - 1) % 2 == 1 { -1 } else { 1 };
        let nn = f.pow(f.from_int(n as u64 % p), n as u64);
        let lead = f.mul(f.from_i64(sign * c_sign), nn);
        let expect = Poly::monomial(&f, lead, n - 1);
        assert_eq!(sym_discriminant(&h).unwrap(), expect, "p={p} n={n}");
        let class = squarefree_part(&expect).unwrap();
        assert_eq!(class.rep().degree(), Some((n - 1) % 2));
    }
}

#[test]
fn cubic_closed_form() {
    // Disc(X^3 + aX + b) = -4a^3 - 27b^2 with b = T
    for p in [5u64, 7, 11] {
        let f = Field::new(p, 1).unwrap();
        for a in 0..p as i64 {
            let h = RPoly::parse(&f, &format!("X^3 + {a}*X + T")).unwrap();
            let expect = Poly::from_ints(&f, &[-4 * a * a * a, 0, -27]);
            assert_eq!(sym_discriminant(&h).unwrap(), expect, "p={p} a={a}");
        }
    }
}

#[test]
fn quadratic_in_x_with_constant_shift() {
    // X^2 - s - T has discriminant 4(s + T)
    let f = Field::new(7, 1).unwrap();
    for s in 0..7i64 {
        let h = RPoly::parse(&f, &format!("X^2 - {s} - T")).unwrap();
        assert_eq!(
            sym_discriminant(&h).unwrap(),
            Poly::from_ints(&f, &[4 * s, 4])
        );
    }
    // X^4 + bX^2 + c has discriminant 16c(b^2 - 4c)^2; here b = -s, c = -T
    for s in 0..7i64 {
        let h = RPoly::parse(&f, &format!("X^4 - {s}*X^2 - T")).unwrap();
        let d = sym_discriminant(&h).unwrap();
        for t in f.elements() {
            assert_eq!(d.eval(t), h.specialize(t).discriminant().unwrap());
        }
        let inner = Poly::from_ints(&f, &[s * s, 4]);
        let expect = Poly::from_ints(&f, &[0, -16])
            .checked_mul(&inner.pow(2))
            .unwrap();
        assert_eq!(d, expect, "s={s}");
    }
}

/// Rank over F_2 of the exponent-parity vectors of the factorizations,
/// with one extra coordinate for a nonsquare leading coefficient.
fn parity_rank(f: &Arc<Field>, us: &[Poly]) -> usize {
    let mut primes: Vec<Poly> = Vec::new();
    let mut rows: Vec<Vec<bool>> = Vec::new();
    for u in us {
        let mut row = vec![!f.is_square(u.leading_coeff().unwrap()).unwrap()];
        let mut exps: Vec<(usize, usize)> = Vec::new();
        if !u.is_constant() {
            for (g, e) in u.factor().unwrap() {
                let idx = primes.iter().position(|p| *p == g).unwrap_or_else(|| {
                    primes.push(g.clone());
                    primes.len() - 1
                });
                exps.push((idx, e));
            }
        }
        row.resize(1 + primes.len(), false);
        for (i, e) in exps {
            row[1 + i] = e % 2 == 1;
        }
        rows.push(row);
    }
    let width = 1 + primes.len();
    for r in &mut rows {
        r.resize(width, false);
    }
    let mut rank = 0;
    for col in 0..width {
        if let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col]) {
            rows.swap(rank, pivot);
            for r in 0..rows.len() {
                if r != rank && rows[r][col] {
                    let pr = rows[rank].clone();
                    for (x, y) in rows[r].iter_mut().zip(pr) {
                        *x ^= y;
                    }
                }
            }
            rank += 1;
        }
    }
    rank
}

#[test]
fn independence_matches_rank_oracle() {
    let f = Field::new(5, 1).unwrap();
    let pool: Vec<Poly> = [
        vec![0, 1],
        vec![1, 1],
        vec![0, 0, 1],
        vec![2, 0, 1],
        vec![0, 1, 1],
        vec![3],
        vec![4],
        vec![2, 3],
        vec![1, 0, 0, 1],
    ]
    .iter()
    .map(|c| Poly::from_ints(&f, c))
    .collect();
    for mask in 1u32..(1 << pool.len()) {
        if mask.count_ones() > 4 {
            continue;
        }
        let us: Vec<Poly> = (0..pool.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| pool[i].clone())
            .collect();
        let classes: Vec<_> = us.iter().map(|u| squarefree_part(u).unwrap()).collect();
        let expect = parity_rank(&f, &us) == us.len();
        assert_eq!(
            square_classes_independent(&classes).unwrap(),
            expect,
            "{us:?}"
        );
    }
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// `z_λ = Π i^(m_i) m_i!`, so a cycle type λ has density `1 / z_λ` in `S_n`.
fn z(parts: &[usize]) -> u64 {
    let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in parts {
        *mult.entry(p).or_insert(0) += 1;
    }
    mult.iter()
        .map(|(&i, &m)| (i as u64).pow(m as u32) * factorial(m))
        .product()
}

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[test]
fn orbit_densities_follow_cycle_index() {
    // on one σ-orbit of size m, ζσ has orbit type m·λ where λ is the cycle
    // type of a uniform element of S_n
    for n in 1..=4 {
        for m in 1..=3 {
            if factorial(n).pow(m as u32) > 20_000 {
                continue;
            }
            let setup = OrbitSetup::from_orbit_sizes(n, &[m]).unwrap();
            let mut total = Ratio::new(0u64, 1);
            for lambda in partitions(n, n) {
                let t = FactType::new(lambda.iter().map(|&p| p * m).collect()).unwrap();
                let d = predict_density(&setup, &[t]).unwrap();
                assert_eq!(d, Ratio::new(1, z(&lambda)), "n={n} m={m} λ={lambda:?}");
                total += d;
            }
            assert_eq!(total, Ratio::new(1, 1));
        }
    }
}

#[test]
fn transitive_counts_are_products_over_orbits() {
    // n-cycles make up 1/n of S_n, independently on each orbit
    for (n, sizes) in [
        (2, vec![1, 1, 1]),
        (3, vec![2, 1]),
        (4, vec![1, 1]),
        (3, vec![1, 1, 1]),
    ] {
        let setup = OrbitSetup::from_orbit_sizes(n, &sizes).unwrap();
        let order = factorial(n).pow(sizes.iter().sum::<usize>() as u32);
        let expect = order / (n as u64).pow(sizes.len() as u32);
        assert_eq!(count_transitive(&setup).unwrap(), expect);
    }
}

#[test]
fn parity_law_exhaustive_small_degrees() {
    for k in [1, 2] {
        let f = Field::new(2, k).unwrap();
        let max = if k == 1 { 7 } else { 4 };
        for n in 2..=max {
            for h in monics(&f, n) {
                if !h.is_separable() {
                    continue;
                }
                let r: usize = h.factor().unwrap().len();
                let trivial = berlekamp_element(&h).unwrap().class.value == 0;
                assert_eq!((n - r).is_multiple_of(2), trivial, "h = {h}");
            }
        }
    }
}

#[test]
fn odd_discriminant_class_is_frobenius_sign() {
    for p in [3u64, 5, 7] {
        let f = Field::new(p, 1).unwrap();
        for n in 2..=4 {
            if p.pow(n as u32) > 3000 {
                continue;
            }
            for h in monics(&f, n) {
                if !h.is_separable() {
                    continue;
                }
                let r = h.fact_type().unwrap().parts().len();
                assert_eq!(disc_class_odd(&h).unwrap(), (n - r) % 2 == 0, "h = {h}");
            }
        }
    }
}

#[test]
fn swan_small_bound_matches_direct_factoring() {
    let f = Field::new(2, 1).unwrap();
    let rep = swan_mode(&f, 5).unwrap();
    assert_eq!(rep.candidates, 62);
    let t3 = Poly::monomial(&f, f.one(), 3);
    let mut direct = Vec::new();
    for d in 1..=5 {
        for g in monics(&f, d) {
            let h = g.pow(8).checked_add(&t3).unwrap();
            if h.is_irreducible().unwrap() {
                direct.push(g);
            }
        }
    }
    assert_eq!(rep.counterexamples, direct);
    assert!(direct.is_empty());
}

#[test]
fn correlation_marginals_count_irreducible_quadratics() {
    let f = Field::new(2, 4).unwrap();
    let q = f.order();
    let omega: Vec<FieldElem> = f.elements().take(3).collect();
    let rep = correlation_mode(&f, 2, &omega).unwrap();
    assert_eq!(rep.total, q * q);
    for &m in &rep.marginals {
        assert_eq!(m, (q * q - q) / 2);
    }
    let mut brute = 0;
    for g in monics(&f, 2) {
        let all = omega.iter().all(|&w| {
            g.checked_sub(&Poly::constant(&f, w))
                .unwrap()
                .is_irreducible()
                .unwrap()
        });
        brute += all as u64;
    }
    assert_eq!(rep.all_irreducible, brute);
}
