use gamma_core::homology::{
    bar_tor_dims, basis_a, boundary_squares_to_zero, koszul_tor_dims, random_large_prime, BarComplex,
    KoszulComplex, MultigradedComplex,
};
use gamma_core::numtheory::prime_count;
use gamma_core::series::{betti_numbers_ideal, ek_poincare_ideal_graded, golod_poincare, golod_poincare_graded};
use gamma_core::{Integer, RankMode};

#[test]
fn koszul_homology_is_the_betti_vector() {
    for n in 2..=12 {
        let r = prime_count(n);
        let dims = koszul_tor_dims(n, r).unwrap();
        let betti = betti_numbers_ideal(n).unwrap();
        assert_eq!(dims.total(0), 1);
        for q in 1..=r {
            assert_eq!(Integer::from(dims.total(q)), betti[q - 1], "n={n} q={q}");
        }
    }
}

#[test]
fn koszul_graded_slices_follow_the_graded_series() {
    for n in 2..=9 {
        let dims = koszul_tor_dims(n, prime_count(n)).unwrap();
        let ek = ek_poincare_ideal_graded(n).unwrap();
        for ((q, j), d) in dims.iter().filter(|((q, _), _)| *q > 0) {
            assert_eq!(Integer::from(d), ek.coeff(q as u32 - 1, j), "n={n} ({q},{j})");
        }
        let total: usize = dims.iter().filter(|((q, _), _)| *q > 0).map(|(_, d)| d).sum();
        let ek_total: Integer = ek.terms().map(|(_, c)| c.clone()).sum();
        assert_eq!(Integer::from(total), ek_total);
    }
}

#[test]
fn exact_bar_homology_expands_the_golod_series() {
    for n in 2..=6 {
        let dims = bar_tor_dims(n, 4, RankMode::Exact).unwrap();
        let plain = golod_poincare(n).unwrap().t_series(4).unwrap();
        let graded = golod_poincare_graded(n).unwrap().series_expand(4).unwrap();
        for (q, want) in plain.iter().enumerate() {
            assert_eq!(Integer::from(dims.total(q)), *want, "n={n} q={q}");
        }
        for ((q, j), d) in dims.iter() {
            assert_eq!(Integer::from(d), graded.coeff(q as u32, j), "n={n} ({q},{j})");
        }
        for ((q, j), c) in graded.terms() {
            assert_eq!(Integer::from(dims.get(q as usize, j)), *c);
        }
    }
}

#[test]
fn modular_bar_homology_expands_the_golod_series() {
    let p = random_large_prime(11);
    for n in 7..=10 {
        let dims = bar_tor_dims(n, 3, RankMode::Modular(p)).unwrap();
        let plain = golod_poincare(n).unwrap().t_series(3).unwrap();
        let got: Vec<Integer> = dims.totals(3).into_iter().map(Integer::from).collect();
        assert_eq!(got, plain, "n={n}");
    }
}

#[test]
fn complexes_have_the_expected_terms() {
    let k = KoszulComplex::new(11).unwrap();
    let sizes: Vec<usize> = (0..=5).map(|q| k.cells(q).values().map(Vec::len).sum()).collect();
    assert_eq!(sizes, vec![11, 55, 110, 110, 55, 11]);
    let b = BarComplex::new(7).unwrap();
    assert!(boundary_squares_to_zero(&b, 3));
    let sizes: Vec<usize> = (0..=3).map(|q| b.cells(q).values().map(Vec::len).sum()).collect();
    assert_eq!(sizes, vec![1, 6, 36, 216]);
    for n in 1..=60 {
        let basis = basis_a(n);
        assert_eq!(basis.len(), n as usize);
        assert!(basis.windows(2).all(|w| w[0].weight() < w[1].weight()));
    }
}
