use num_bigint::BigInt;
use proptest::prelude::*;
use sympsum_core::calculus::Scalar;
use sympsum_core::dsl::ast::{Arg, BinOp, Expr, ExprKind, Script, Stmt, StmtKind};
use sympsum_core::dsl::{self, Pos};
use sympsum_core::geography;
use sympsum_core::pipeline::{build_kn, build_nn, build_xn, exotic_family, reference, Mode};

#[test]
fn numeric_builds_match_symbolic() {
    let x = build_xn(&Mode::Symbolic).unwrap().manifold;
    let nn = build_nn(&Mode::Symbolic).unwrap().manifold;
    let k = build_kn(&Mode::Symbolic).unwrap().manifold;
    for n in 2u64..=50 {
        let at = BigInt::from(n);
        let mode = Mode::numeric(n);
        assert_eq!(build_xn(&mode).unwrap().manifold.numbers(), x.at(&at).numbers(), "X_{n}");
        let num_n = build_nn(&mode).unwrap().manifold;
        assert_eq!(num_n.numbers(), nn.at(&at).numbers(), "N_{n}");
        assert_eq!(num_n.surfaces, nn.at(&at).surfaces, "N_{n}");
        let num_k = build_kn(&mode).unwrap();
        assert!(num_k.all_pass(), "K_{n}");
        assert_eq!(num_k.manifold.numbers(), k.at(&at).numbers(), "K_{n}");
        assert_eq!(num_k.manifold.sw, k.at(&at).sw, "K_{n}");
    }
}

#[test]
fn symbolic_reports_pass() {
    for r in [build_xn(&Mode::Symbolic), build_nn(&Mode::Symbolic), build_kn(&Mode::Symbolic)] {
        let r = r.unwrap();
        assert!(r.checks.iter().all(|c| c.pass), "{}", r.name);
    }
}

#[test]
fn signature_sign_pattern() {
    for n in 2u64..=50 {
        let sigma = build_kn(&Mode::numeric(n)).unwrap().manifold.sigma().clone();
        let positive = sigma.as_num().unwrap() > &num_rational::BigRational::from_integer(0.into());
        assert_eq!(positive, n >= 3, "n = {n}, sigma = {sigma}");
    }
    assert_eq!(build_kn(&Mode::numeric(2)).unwrap().manifold.sigma(), &Scalar::from(-30));
}

#[test]
fn chi_h_integer_valued() {
    for chi in [reference::xn::chi_h(), reference::nn::chi_h(), reference::kn::chi_h()] {
        assert!(chi.is_integer_valued());
    }
    let k = build_kn(&Mode::Symbolic).unwrap().manifold;
    assert!(k.chi_h().to_poly().is_integer_valued());
}

#[test]
fn gompf_sum_cross_check() {
    let x = build_xn(&Mode::Symbolic).unwrap().manifold;
    let nn = build_nn(&Mode::Symbolic).unwrap().manifold;
    let k = build_kn(&Mode::Symbolic).unwrap().manifold;
    let g = Scalar::from_poly(reference::surface_f::genus());
    let lhs = &(&k.c1sq() - &x.c1sq()) - &nn.c1sq();
    assert_eq!(lhs, (&g - &Scalar::from(1)).scale(&sympsum_core::algebra::int(8)));
}

#[test]
fn large_n_numeric() {
    let r = build_kn(&Mode::numeric(100)).unwrap();
    assert!(r.all_pass());
    let expect = reference::kn::c2().eval_int(100u64);
    assert_eq!(r.manifold.c2().as_num().unwrap(), &expect);
}

#[test]
fn exotic_hundred() {
    let r = exotic_family(2, 100).unwrap();
    assert!(r.pairwise_distinct());
    assert_eq!(r.symplectic_count(), 100);
    assert_eq!(r.non_symplectic_count(), 100);
    assert!(r.entries.iter().take(100).all(|e| e.monic));
}

#[test]
fn csv_relations_from_strings() {
    let text = geography::to_csv(&geography::scan(2, 30).unwrap());
    for line in text.lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        assert_eq!(f.len(), 8);
        let v: Vec<BigInt> = f[1..5].iter().map(|s| s.parse().unwrap()).collect();
        let (e, sigma, c1sq, chi) = (&v[0], &v[1], &v[2], &v[3]);
        assert_eq!(c1sq, &(BigInt::from(3) * sigma + BigInt::from(2) * e));
        assert_eq!(BigInt::from(4) * chi, sigma + e);
        let gap: BigInt = f[6].parse().unwrap();
        assert_eq!(gap, BigInt::from(9) * chi - c1sq);
    }
}

#[test]
fn outputs_deterministic() {
    let rows = geography::scan(2, 10).unwrap();
    assert_eq!(geography::to_csv(&rows), geography::to_csv(&geography::scan(2, 10).unwrap()));
    assert_eq!(geography::render_svg(&rows), geography::render_svg(&rows));
}

const P: Pos = Pos { line: 1, col: 1 };

fn mk(kind: ExprKind) -> Expr {
    Expr { kind, pos: P }
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        prop::sample::select(vec!["n", "X", "T4", "F_reg", "a1"]).prop_map(|s| mk(ExprKind::Name(s.into()))),
        (0u32..1000).prop_map(|i| mk(ExprKind::Int(i.into()))),
    ];
    leaf.prop_recursive(5, 48, 4, |inner| {
        let op = prop::sample::select(vec![BinOp::Add, BinOp::Sub, BinOp::Mul, BinOp::Div, BinOp::Pow]);
        let arg = (prop::option::of(prop::sample::select(vec!["k", "degree", "genus"])), inner.clone())
            .prop_map(|(name, value)| Arg { name: name.map(String::from), value, pos: P });
        prop_oneof![
            inner.clone().prop_map(|e| mk(ExprKind::Neg(Box::new(e)))),
            (op, inner.clone(), inner.clone())
                .prop_map(|(op, l, r)| mk(ExprKind::Binary(op, Box::new(l), Box::new(r)))),
            (prop::sample::select(vec!["blowup", "fiber_sum", "torus"]), prop::collection::vec(arg, 0..4))
                .prop_map(|(f, args)| mk(ExprKind::Call { func: f.into(), args })),
            (inner, prop::sample::select(vec!["genus", "section", "e"]))
                .prop_map(|(e, f)| mk(ExprKind::Member(Box::new(e), f.into()))),
        ]
    })
}

fn script() -> impl Strategy<Value = Script> {
    prop::collection::vec((prop::option::of(prop::sample::select(vec!["A", "B_2", "K"])), expr()), 1..4).prop_map(
        |stmts| Script {
            stmts: stmts
                .into_iter()
                .map(|(name, value)| Stmt {
                    kind: match name {
                        Some(name) => StmtKind::Let { name: name.into(), value },
                        None => StmtKind::Report(value),
                    },
                    pos: P,
                })
                .collect(),
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn print_parse_roundtrip(s in script()) {
        let printed = dsl::print(&s);
        let reparsed = dsl::parse_syntax(&printed).unwrap();
        prop_assert_eq!(&reparsed, &s, "printed: {}", printed);
        prop_assert_eq!(dsl::print(&reparsed), printed);
    }

    #[test]
    fn dsl_matches_direct_build(n in 2u64..=10) {
        let src = include_str!("../../../scripts/kn.geo");
        let ev = dsl::evaluate(&dsl::parse(src).unwrap(), &Mode::numeric(n)).unwrap();
        let dsl::Value::Manifold(m) = ev.report else { panic!("report is not a manifold") };
        let direct = build_kn(&Mode::numeric(n)).unwrap().manifold;
        prop_assert_eq!(m.numbers(), direct.numbers());
        prop_assert_eq!(m.sw, direct.sw);
    }
}
