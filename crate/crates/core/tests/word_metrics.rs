use std::collections::HashMap;

use distortion_core::algebra::HeisElt;
use distortion_core::groups::{
    heisenberg_witness, mess_certificate, mess_witness, FreeAbelian, HeisGroup, MessElt, MessGroup,
};
use distortion_core::algebra::GoldenInt;
use distortion_core::words::{
    cayley_ball, cayley_ball_with, distortion_series, eval_word, translation_length_estimate, word_length_exact,
    BfsOptions, FrontierOrder, GroupOracle, Token, Word, WordError,
};
use num_bigint::BigInt;
use num_rational::BigRational;

/// Heisenberg product written out independently of the library.
fn heis_mul(u: (i64, i64, i64), v: (i64, i64, i64)) -> (i64, i64, i64) {
    (u.0 + v.0, u.1 + v.1, u.2 + v.2 + u.0 * v.1)
}

/// Minimal word length of every element reachable by words of length
/// `≤ max_len` in `{g, h}^±`, by enumerating all words.
fn brute_force_lengths(max_len: usize) -> HashMap<(i64, i64, i64), usize> {
    let letters = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0)];
    let mut best = HashMap::new();
    let mut layer = vec![(0i64, 0i64, 0i64)];
    best.insert((0, 0, 0), 0);
    for len in 1..=max_len {
        let mut next = Vec::with_capacity(layer.len() * 4);
        for &e in &layer {
            for &l in &letters {
                let p = heis_mul(e, l);
                best.entry(p).or_insert(len);
                next.push(p);
            }
        }
        layer = next;
    }
    best
}

#[test]
fn center_lengths_match_brute_force() {
    let brute = brute_force_lengths(6);
    assert_eq!(brute[&(0, 0, 1)], 4);
    assert_eq!(brute[&(0, 0, 2)], 6);
    let g = HeisGroup::standard();
    assert_eq!(word_length_exact(&g, &HeisElt::new(0, 0, 1), 4, 1_000_000).unwrap(), Some(4));
    assert_eq!(word_length_exact(&g, &HeisElt::new(0, 0, 2), 6, 1_000_000).unwrap(), Some(6));
    assert_eq!(word_length_exact(&g, &HeisElt::new(0, 0, 1), 3, 1_000_000).unwrap(), None);
    assert_eq!(word_length_exact(&g, &HeisElt::IDENTITY, 0, 1).unwrap(), Some(0));

    let ball = cayley_ball(&g, 6, 1_000_000).unwrap();
    assert_eq!(ball.len(), brute.len());
    for (k, d) in ball.iter() {
        assert_eq!(brute[&(k.x, k.y, k.z)], d as usize);
    }
}

#[test]
fn radius_zero_and_growth() {
    let g = HeisGroup::standard();
    let b0 = cayley_ball(&g, 0, 10).unwrap();
    assert_eq!(b0.len(), 1);
    assert_eq!(b0.length(&HeisElt::IDENTITY), Some(0));
    let sizes = cayley_ball(&g, 4, 1_000_000).unwrap().ball_sizes();
    assert!(sizes.windows(2).all(|w| w[0] < w[1]));
    assert_eq!(sizes[1], 5);
}

fn check_metric_axioms<O: GroupOracle>(oracle: &O, radius: u32) {
    let ball = cayley_ball(oracle, radius, 1_000_000).unwrap();
    let mut elems: HashMap<O::Key, O::Elem> = HashMap::new();
    // rebuild elements from words to test products independently of the table
    let letters: Vec<Token> =
        (0..oracle.generators().len()).flat_map(|g| [Token::new(g, false), Token::new(g, true)]).collect();
    let mut layer = vec![Word::empty()];
    elems.insert(oracle.key(&oracle.identity()), oracle.identity());
    for _ in 0..radius {
        let mut next = Vec::new();
        for w in &layer {
            for &t in &letters {
                let mut v = w.tokens().to_vec();
                v.push(t);
                let w2 = Word::new(v);
                let e = eval_word(oracle, &w2).unwrap();
                if elems.insert(oracle.key(&e), e).is_none() {
                    next.push(w2);
                }
            }
        }
        layer = next;
    }
    assert_eq!(elems.len(), ball.len());
    assert_eq!(ball.length(&oracle.key(&oracle.identity())), Some(0));
    let sample: Vec<(&O::Key, &O::Elem)> = elems.iter().collect();
    for (k, e) in &sample {
        let d = ball.length(k).unwrap();
        assert!(d <= radius);
        let inv = oracle.invert(e).unwrap();
        assert_eq!(ball.length(&oracle.key(&inv)), Some(d));
    }
    for (i, (ka, a)) in sample.iter().enumerate().step_by(7) {
        for (kb, b) in sample.iter().skip(i % 5).step_by(11) {
            let p = oracle.multiply(a, b).unwrap();
            if let Some(dp) = ball.length(&oracle.key(&p)) {
                assert!(dp <= ball.length(ka).unwrap() + ball.length(kb).unwrap());
            }
        }
    }
}

#[test]
fn metric_axioms() {
    check_metric_axioms(&HeisGroup::standard(), 5);
    check_metric_axioms(&HeisGroup::with_center(), 4);
    check_metric_axioms(&MessGroup::new(), 5);
    check_metric_axioms(&FreeAbelian::new(2), 6);
}

#[test]
fn bfs_is_deterministic() {
    let g = HeisGroup::with_center();
    let reference = cayley_ball(&g, 5, 1_000_000).unwrap().sorted_entries();
    for threads in [None, Some(1), Some(2), Some(4), Some(8)] {
        for order in [FrontierOrder::Sorted, FrontierOrder::Reversed, FrontierOrder::Shuffled(7), FrontierOrder::Shuffled(99)] {
            let opts = BfsOptions { node_cap: 1_000_000, threads, order };
            let ball = cayley_ball_with(&g, 5, &opts).unwrap();
            assert_eq!(ball.sorted_entries(), reference, "{threads:?} {order:?}");
        }
    }
    let m = MessGroup::new();
    let a = cayley_ball_with(&m, 6, &BfsOptions { threads: Some(4), ..BfsOptions::default() }).unwrap();
    let b = cayley_ball_with(&m, 6, &BfsOptions { order: FrontierOrder::Shuffled(3), ..BfsOptions::default() }).unwrap();
    assert_eq!(a.sorted_entries(), b.sorted_entries());
}

#[test]
fn generator_independence() {
    // f = ghGH has length 4 in {g,h}; g, h have length 1 in {g,h,f}
    let small = HeisGroup::standard();
    let big = HeisGroup::with_center();
    let r = 5;
    let b_small = cayley_ball(&small, r, 1_000_000).unwrap();
    let b_big = cayley_ball(&big, r, 1_000_000).unwrap();
    let c = 4;
    for (k, d) in b_small.iter() {
        let d_big = b_big.length(k).expect("the larger generating set reaches it sooner");
        assert!(d_big <= d && d <= c * d_big, "{k}: {d} vs {d_big}");
    }
    // every element of the big ball within r/c lies in the small ball at most c times as far
    for (k, d) in b_big.iter().filter(|(_, d)| *d <= 1) {
        assert!(b_small.length(k).unwrap() <= c * d);
    }
}

#[test]
fn center_is_undistorted_in_itself() {
    let z = HeisGroup::center_only();
    let ball = cayley_ball(&z, 20, 1_000).unwrap();
    for n in 1..=20i64 {
        assert_eq!(ball.length(&HeisElt::new(0, 0, n)), Some(n as u32));
        assert_eq!(ball.length(&HeisElt::new(0, 0, -n)), Some(n as u32));
    }
}

#[test]
fn mess_ball_reaches_first_certificate() {
    let m = MessGroup::new();
    let target = MessElt::new(0, GoldenInt::new(3, 0));
    let d = word_length_exact(&m, &target, 6, 1_000_000).unwrap().unwrap();
    assert!(d <= 6);
    let t = eval_word(&m, &Word::power(1, 6)).unwrap();
    assert_eq!(t, MessElt::new(0, GoldenInt::new(6, 0)));
    assert_eq!(eval_word(&m, &mess_certificate(1).unwrap().word).unwrap(), target);
}

#[test]
fn node_cap_reports_partial_stats() {
    let g = HeisGroup::standard();
    match cayley_ball(&g, 10, 100) {
        Err(WordError::BallTooLarge { radius_reached, nodes, sphere_sizes }) => {
            assert_eq!(sphere_sizes.len() as u32, radius_reached + 1);
            assert_eq!(sphere_sizes.iter().sum::<usize>(), nodes);
            assert!(nodes <= 100);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn eval_is_a_homomorphism() {
    let g = HeisGroup::standard();
    let w1 = Word::new(vec![Token::new(0, false), Token::new(1, true), Token::new(0, false)]);
    let w2 = Word::new(vec![Token::new(1, false), Token::new(1, false), Token::new(0, true)]);
    let lhs = eval_word(&g, &w1.clone().concat(&w2)).unwrap();
    let rhs = eval_word(&g, &w1).unwrap().mul(&eval_word(&g, &w2).unwrap()).unwrap();
    assert_eq!(lhs, rhs);
    assert_eq!(eval_word(&g, &Word::empty()).unwrap(), HeisElt::IDENTITY);
    assert!(matches!(
        eval_word(&g, &Word::power(5, 1)),
        Err(WordError::GeneratorOutOfRange { index: 5, count: 2 })
    ));
}

#[test]
fn mess_series() {
    let ws: Vec<_> = (1..=6).map(|n| mess_witness(n).unwrap()).collect();
    let rows = distortion_series(&MessGroup::new(), &ws).unwrap();
    let expect = [(6, 3), (10, 7), (14, 18), (18, 47), (22, 123), (26, 322)];
    for (r, (tok, p)) in rows.iter().zip(expect) {
        assert_eq!(r.tokens, tok);
        assert_eq!(r.power, BigInt::from(p));
    }
    let last = rows.last().unwrap();
    assert_eq!(last.envelope, BigRational::new(26.into(), 322.into()));
    assert!(rows.windows(2).all(|w| w[1].envelope <= w[0].envelope));
}

#[test]
fn heisenberg_series() {
    let ws: Vec<_> = (1..=10).map(|n| heisenberg_witness(n).unwrap()).collect();
    let rows = distortion_series(&HeisGroup::standard(), &ws).unwrap();
    for (n, r) in (1..=10).zip(&rows) {
        assert_eq!(r.ratio, BigRational::new(4.into(), BigInt::from(n)));
    }
    assert_eq!(rows.last().unwrap().envelope, BigRational::new(2.into(), 5.into()));
}

#[test]
fn unverified_certificates_are_refused() {
    let mut ws: Vec<_> = (1..=3).map(|n| heisenberg_witness(n).unwrap()).collect();
    ws[1].certificate.word.tokens_mut()[0] = ws[1].certificate.word.tokens()[0].inv();
    assert_eq!(
        distortion_series(&HeisGroup::standard(), &ws).unwrap_err(),
        WordError::UnverifiedCertificate { n: 2 }
    );
    // a certificate for the wrong group is rejected too
    let w = heisenberg_witness(2).unwrap();
    assert!(distortion_series(&MessGroup::new(), &[w]).is_err());
}

#[test]
fn undistorted_series() {
    let z = FreeAbelian::new(1);
    let samples = translation_length_estimate(&z, &vec![1], 10, 10, &BfsOptions::default(), &[]).unwrap();
    assert!(samples.iter().all(|s| s.ratio == 1.0 && s.exact));
    let z2 = FreeAbelian::new(2);
    let samples = translation_length_estimate(&z2, &vec![1, 0], 8, 8, &BfsOptions::default(), &[]).unwrap();
    assert_eq!(samples.len(), 8);
    assert!(samples.iter().all(|s| s.ratio == 1.0));
}

#[test]
fn translation_length_with_certificate_words() {
    let g = HeisGroup::standard();
    let f = HeisElt::new(0, 0, 1);
    let words: Vec<(u64, Word)> =
        (1..=3).map(|k| ((k * k) as u64, heisenberg_witness(k as u64).unwrap().certificate.word)).collect();
    let samples = translation_length_estimate(&g, &f, 9, 0, &BfsOptions::default(), &words).unwrap();
    let got: Vec<(u64, u32)> = samples.iter().map(|s| (s.n, s.length)).collect();
    assert_eq!(got, vec![(1, 4), (4, 8), (9, 12)]);
    assert!(samples.iter().all(|s| !s.exact));
    assert_eq!(samples.last().unwrap().envelope, 12.0 / 9.0);

    let m = MessGroup::new();
    let t = m.generators()[1].clone();
    let cert = mess_certificate(3).unwrap();
    let s = translation_length_estimate(&m, &t, 18, 0, &BfsOptions::default(), &[(18, cert.word)]).unwrap();
    assert_eq!((s[0].n, s[0].length), (18, 14));
    assert!(s[0].ratio <= 14.0 / 18.0);

    assert_eq!(translation_length_estimate(&g, &f, 3, 0, &BfsOptions::default(), &[]).unwrap_err(), WordError::Unknown);
    let bogus = vec![(1u64, Word::power(0, 4))];
    assert!(translation_length_estimate(&g, &f, 1, 0, &BfsOptions::default(), &bogus).is_err());
}
