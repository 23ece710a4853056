use nekbounds::format::{parse_matrix_market, parse_plain, read_matrix};
use nekbounds::{parse_matrix, render_plain, InputFormat, ParseErrorKind};
use nekrasov_core::{Complex64, SquareMatrix};
use proptest::prelude::*;

fn fixture(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.txt"))
}

fn finite() -> impl Strategy<Value = f64> {
    prop_oneof![
        any::<f64>().prop_filter("finite", |x| x.is_finite()),
        -1e3f64..1e3,
        Just(0.0),
        Just(-0.0),
    ]
}

fn real_matrix() -> impl Strategy<Value = SquareMatrix> {
    (1usize..=6).prop_flat_map(|n| {
        proptest::collection::vec(finite(), n * n)
            .prop_map(move |v| SquareMatrix::from_real(n, v).unwrap())
    })
}

fn complex_matrix() -> impl Strategy<Value = SquareMatrix> {
    (1usize..=5).prop_flat_map(|n| {
        proptest::collection::vec((finite(), finite()), n * n).prop_map(move |v| {
            SquareMatrix::from_complex(
                n,
                v.into_iter()
                    .map(|(re, im)| Complex64::new(re, im))
                    .collect(),
            )
            .unwrap()
        })
    })
}

fn bits(a: &SquareMatrix) -> Vec<(u64, u64)> {
    let n = a.dim();
    (0..n * n)
        .map(|k| {
            let z = a.get(k / n, k % n);
            (z.re.to_bits(), z.im.to_bits())
        })
        .collect()
}

proptest! {
    #[test]
    fn plain_round_trip_is_bit_exact(a in real_matrix()) {
        let back = parse_plain(&render_plain(&a)).unwrap();
        prop_assert!(!back.is_complex());
        prop_assert_eq!(bits(&back), bits(&a));
    }

    #[test]
    fn complex_round_trip_is_bit_exact(a in complex_matrix()) {
        let back = parse_plain(&render_plain(&a)).unwrap();
        prop_assert!(back.is_complex());
        prop_assert_eq!(bits(&back), bits(&a));
    }

    #[test]
    fn matrix_market_array_matches_plain(a in real_matrix()) {
        let n = a.dim();
        let mut mm = format!("%%MatrixMarket matrix array real general\n% generated\n{n} {n}\n");
        for j in 0..n {
            for i in 0..n {
                mm.push_str(&format!("{}\n", a.get(i, j).re));
            }
        }
        prop_assert_eq!(bits(&parse_matrix_market(&mm).unwrap()), bits(&a));
    }

    #[test]
    fn matrix_market_coordinate_matches_plain(a in complex_matrix()) {
        let n = a.dim();
        let mut body = String::new();
        let mut nnz = 0;
        for i in 0..n {
            for j in 0..n {
                let z = a.get(i, j);
                if z.re != 0.0 || z.im != 0.0 || z.re.is_sign_negative() || z.im.is_sign_negative() {
                    body.push_str(&format!("{} {} {} {}\n", i + 1, j + 1, z.re, z.im));
                    nnz += 1;
                }
            }
        }
        let mm = format!("%%MatrixMarket matrix coordinate complex general\n{n} {n} {nnz}\n{body}");
        prop_assert_eq!(bits(&parse_matrix_market(&mm).unwrap()), bits(&a));
    }

    #[test]
    fn parser_never_panics(text in "[0-9 .eE+\\-i\\n%a-z]{0,60}") {
        let _ = parse_matrix(&text, InputFormat::detect(&text));
    }
}

#[test]
fn fixtures_match_reference_matrices() {
    let a1 = read_matrix(&fixture("a1")).unwrap();
    let expected = SquareMatrix::from_rows(&[
        [-7.0, 1.0, -0.2, 2.0],
        [7.0, 88.0, 2.0, -3.0],
        [2.0, 0.5, 13.0, -2.0],
        [0.5, 3.0, 1.0, 6.0],
    ])
    .unwrap();
    assert_eq!(a1, expected);
    let a5 = read_matrix(&fixture("a5")).unwrap();
    assert_eq!(
        a5,
        SquareMatrix::from_rows(&[[6.0, -3.0, -2.0], [-1.0, 11.0, -8.0], [-7.0, -3.0, 10.0]])
            .unwrap()
    );
    for name in ["a2", "a3", "a4", "a6"] {
        assert_eq!(read_matrix(&fixture(name)).unwrap().dim(), 4, "{name}");
    }
}

#[test]
fn read_matrix_detects_matrix_market() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.mtx");
    std::fs::write(
        &path,
        "%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 4\n2 2 5\n",
    )
    .unwrap();
    let a = read_matrix(&path).unwrap();
    assert_eq!(a, SquareMatrix::from_diagonal(&[4.0, 5.0]).unwrap());
}

#[test]
fn errors_carry_positions() {
    let e = parse_plain("3\n1 2 3\n4 5 6\n7 8 1..5\n").unwrap_err();
    assert_eq!((e.line, e.column), (4, 5));
    assert!(e.to_string().starts_with("line 4, column 5: "), "{e}");

    let e = parse_plain("2\n1 nan\n0 1\n").unwrap_err();
    assert_eq!((e.line, e.column), (2, 3));

    let e = parse_matrix_market("%%MatrixMarket matrix array real general\n3 2\n").unwrap_err();
    assert_eq!(e.kind, ParseErrorKind::NonSquare { rows: 3, cols: 2 });

    let e = parse_plain("").unwrap_err();
    assert_eq!(e.kind, ParseErrorKind::Empty);
    let e = parse_matrix_market("").unwrap_err();
    assert_eq!(e.kind, ParseErrorKind::Empty);
}
