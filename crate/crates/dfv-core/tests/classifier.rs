use dfv_core::finiteness::{
    classify_table, classify_table_published, forbidden_witness, is_finite_bruteforce, is_finite_fast, table_rows,
    JointTriple, ParabolicShape, TableRow,
};
use dfv_core::young::Composition;

fn c(v: &[usize]) -> Composition {
    Composition(v.to_vec())
}

#[test]
fn published_rows_miss_only_the_rank_two_gap() {
    for n in 1..=9 {
        for t in JointTriple::all_of(n) {
            let sh = ParabolicShape::of(&t);
            if classify_table_published(&sh) != is_finite_fast(&t) {
                assert!(is_finite_fast(&t), "{t}");
                assert_eq!(table_rows(&sh), vec![TableRow::P43], "{t}");
                assert_eq!(sh.p.blocks, 4);
                assert!(sh.p.min_part >= 2);
                let (big, small) = if sh.q2.size == 2 && sh.q2.blocks == 1 { (sh.q1, sh.q2) } else { (sh.q2, sh.q1) };
                assert_eq!((small.size, small.blocks), (2, 1));
                assert!(big.blocks >= 5);
            }
        }
    }
    let t = JointTriple::from_flags(&c(&[1; 6]), &c(&[2]), &c(&[2, 2, 2, 2])).unwrap();
    assert!(is_finite_bruteforce(&t));
    assert!(!classify_table_published(&ParabolicShape::of(&t)));
}

#[test]
fn witnesses_are_summands_with_nonpositive_form() {
    for t in JointTriple::all_of(7) {
        if let Some(m) = forbidden_witness(&t) {
            let s = m.summand;
            assert!(s.tits_form_doubled() <= 0, "{t} -> {s}");
            for (x, y) in [(s.a(), t.a()), (s.b(), t.b()), (s.c(), t.c())] {
                assert!(x.parts().iter().zip(y.parts()).all(|(u, v)| u <= v));
            }
        }
    }
}

#[test]
fn every_triple_is_covered_or_infinite() {
    for t in JointTriple::all_of(8) {
        assert_eq!(classify_table(&ParabolicShape::of(&t)), is_finite_bruteforce(&t), "{t}");
    }
}
