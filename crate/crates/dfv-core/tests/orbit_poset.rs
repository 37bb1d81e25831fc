use dfv_core::oracle::conormal_basis;
use dfv_core::orbit::{closure_leq, dim_variety, enumerate_orbits, hasse_covers, orbit_count};

#[test]
fn closure_order_is_a_partial_order_with_a_dense_orbit() {
    for p in 0..=3 {
        for q in 0..=3 {
            for r in 1..=p + q {
                let o = enumerate_orbits(p, q, r).unwrap();
                assert_eq!(o.len() as u128, orbit_count(p, q, r));
                let leq = |a: usize, b: usize| closure_leq(&o[a], &o[b]).unwrap();
                for a in 0..o.len() {
                    assert!(leq(a, a));
                    for b in 0..o.len() {
                        if a != b && leq(a, b) {
                            assert!(!leq(b, a));
                            assert!(o[a].dim_orbit() <= o[b].dim_orbit());
                        }
                    }
                }
                let tops: Vec<usize> = (0..o.len()).filter(|&b| (0..o.len()).all(|a| leq(a, b))).collect();
                assert_eq!(tops.len(), 1);
                assert_eq!(o[tops[0]].dim_orbit(), dim_variety(p, q, r));
                let covers = hasse_covers(&o).unwrap();
                assert!(covers.iter().all(|&(a, b)| leq(a, b) && a != b));
            }
        }
    }
}

#[test]
fn conormal_fibers_have_complementary_dimension() {
    for p in 0..=2 {
        for q in 0..=2 {
            for r in 1..=p + q {
                for w in enumerate_orbits(p, q, r).unwrap() {
                    let codim = dim_variety(p, q, r) - w.dim_orbit();
                    assert_eq!(conormal_basis(&w).dim(), codim, "{w}");
                }
            }
        }
    }
}
