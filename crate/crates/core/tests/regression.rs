//! Chart brackets frozen from an independent 60-digit evaluation
//! (`tests/oracles/sklyanin_mpmath.py`: matrix exponentials, numerical
//! differentiation, QR least squares). Only the x-x brackets have closed
//! forms; the rest are pinned here.

use lie_double::poisson::chart_brackets;

struct Frozen {
    coords: [f64; 6],
    eta: f64,
    xi: f64,
    /// `(k, l, {u_k, u_l})` in chart order `x0 x1 x2 th0 th1 th2`.
    values: [(usize, usize, f64); 15],
}

const FROZEN: [Frozen; 3] = [
    Frozen {
        coords: [0.1, 0.2, 0.3, 0.4, 0.5, 0.6],
        eta: 0.5,
        xi: 1.0,
        values: [
            (0, 1, -0.32830201589038116),
            (0, 2, 0.21977496836861354),
            (0, 3, 0.1115757697613669),
            (0, 4, -0.06341931331680452),
            (0, 5, 0.06557346062659637),
            (1, 2, 0.11034550175038495),
            (1, 3, 0.056020412101043186),
            (1, 4, -0.03184182439225898),
            (1, 5, 0.17789093985788085),
            (2, 3, 0.0),
            (2, 4, 0.0),
            (2, 5, -0.0970455182237316),
            (3, 4, -0.12869214147548635),
            (3, 5, -0.14854299296228637),
            (4, 5, 0.28216752398528877),
        ],
    },
    Frozen {
        coords: [-0.35, 0.6, -0.15, 0.7, -0.25, 0.45],
        eta: -0.8,
        xi: 2.0,
        values: [
            (0, 1, 0.1650670814065825),
            (0, 2, 0.6167780000390289),
            (0, 3, -0.4750146383030598),
            (0, 4, -0.00666744661200603),
            (0, 5, 0.18343268093597276),
            (1, 2, -0.39744475407688584),
            (1, 3, 0.30609405019526303),
            (1, 4, 0.004296427043217846),
            (1, 5, 0.1522293822974499),
            (2, 3, 0.0),
            (2, 4, 0.0),
            (2, 5, 1.0104745858686275),
            (3, 4, 0.8454843372772012),
            (3, 5, -0.4243886824507917),
            (4, 5, -0.03610306638896998),
        ],
    },
    Frozen {
        coords: [0.55, -0.4, 0.25, -0.6, 0.3, -0.75],
        eta: 0.3,
        xi: -1.0,
        values: [
            (0, 1, 0.21494234400501253),
            (0, 2, 0.3429079555287818),
            (0, 3, 0.1444598934523517),
            (0, 4, 0.11081716279741595),
            (0, 5, 0.031862088707912926),
            (1, 2, -0.4781061705880688),
            (1, 3, -0.2014160515919182),
            (1, 4, -0.1545090117807433),
            (1, 5, -0.1351782481054349),
            (2, 3, 0.0),
            (2, 4, 0.0),
            (2, 5, -0.1447841076395527),
            (3, 4, -0.19087660289487482),
            (3, 5, 0.123422702445782),
            (4, 5, 0.28292139097862967),
        ],
    },
];

#[test]
fn chart_brackets_match_oracle() {
    for f in &FROZEN {
        let pi = chart_brackets(&f.coords, f.eta, f.xi).unwrap();
        for &(k, l, want) in &f.values {
            let got = pi[(k, l)];
            assert!((got - want).abs() <= 1e-12 * want.abs().max(1.0), "{:?} {{{k},{l}}}: {got} vs {want}", f.coords);
            assert_eq!(pi[(l, k)], -got);
        }
    }
}

#[test]
fn x2_commutes_with_th0_and_th1() {
    for f in &FROZEN {
        let pi = chart_brackets(&f.coords, f.eta, f.xi).unwrap();
        assert!(pi[(2, 3)].abs() < 1e-14 && pi[(2, 4)].abs() < 1e-14);
    }
}
