use infbh::catalog;
use infbh::model::{matches_expectation, verify, Model};

#[test]
fn every_entry_meets_its_expectation() {
    for m in catalog::all() {
        let (kind, report) = verify(&m, None, false).unwrap();
        let name = m.name.clone().unwrap();
        assert!(matches_expectation(&report, m.expect.as_ref().unwrap()), "{name} ({kind}):\n{report}");
    }
}

#[test]
fn json_round_trip_is_lossless() {
    for m in catalog::all() {
        let json = m.to_json();
        let back = Model::parse(&json).unwrap();
        assert_eq!(back, m);
        assert_eq!(back.to_json(), json);
    }
}

#[test]
fn trunc_poly_fails_only_on_truncated_products() {
    for n in 1..=4 {
        let m = catalog::get(&format!("trunc-poly-{n}")).unwrap();
        let (_, report) = verify(&m, None, false).unwrap();
        assert_eq!(report.ids(), vec!["(12.4)".to_string()]);
        let mut got: Vec<_> = report.violations.iter().map(|v| v.indices.clone()).collect();
        got.sort();
        let want: Vec<_> = (0..=n).flat_map(|i| (0..=n).map(move |j| vec![i, j])).filter(|p| p[0] + p[1] > n).collect();
        assert_eq!(got, want);
    }
}

#[test]
fn unknown_names_are_rejected() {
    assert!(catalog::get("nope").is_err());
    assert!(catalog::get("trunc-poly-0").is_err());
}

mod loading {
    use infbh::model::{Kind, Model};
    use infbh::Error;

    #[test]
    fn out_of_range_index() {
        let e = Model::parse(r#"{"dim": 2, "mul": [[0, 0, 5, "1"]]}"#).unwrap_err();
        assert!(matches!(e, Error::IndexOutOfRange { ref path, index: 5, bound: 2 } if path == "mul[0]"), "{e}");
    }

    #[test]
    fn zero_denominator() {
        let e = Model::parse(r#"{"dim": 1, "mul": [[0, 0, 0, "1/0"]]}"#).unwrap_err();
        assert!(matches!(e, Error::BadScalar(ref s) if s.contains("mul[0]")), "{e}");
    }

    #[test]
    fn malformed_json_reports_position() {
        let e = Model::parse("{\"dim\": 2,\n \"mul\": [}").unwrap_err();
        assert!(matches!(e, Error::Parse { ref path, .. } if path.starts_with("line 2")), "{e}");
    }

    #[test]
    fn wrong_matrix_shape_and_duplicates() {
        assert!(matches!(Model::parse(r#"{"dim": 2, "alpha": [["1"]]}"#), Err(Error::Parse { .. })));
        let dup = r#"{"dim": 1, "mul": [[0, 0, 0, "1"], [0, 0, 0, "2"]]}"#;
        assert!(matches!(Model::parse(dup), Err(Error::Parse { ref path, .. }) if path == "mul[1]"));
        assert!(Model::parse(r#"{"dim": 1, "bogus": 3}"#).is_err());
    }

    #[test]
    fn kind_inference() {
        let m = Model::parse(r#"{"dim": 1, "mul": [[0, 0, 0, "1"]]}"#).unwrap();
        assert_eq!(m.infer_kind().unwrap(), Kind::Algebra);
        let m = Model::parse(r#"{"dim": 1, "lambda": "0", "mul": [[0, 0, 0, "1"]], "comul": [[0, 0, 0, "1"]]}"#).unwrap();
        assert_eq!(m.infer_kind().unwrap(), Kind::Bialgebra);
        assert!(Model::parse(r#"{"dim": 1}"#).unwrap().infer_kind().is_err());
        let m = Model::parse(r#"{"dim": 1, "kind": "prelie", "mul": [[0, 0, 0, "1"]]}"#).unwrap();
        assert_eq!(m.infer_kind().unwrap(), Kind::PreLie);
        assert!(Model::parse(r#"{"dim": 1, "kind": "nope"}"#).is_err());
    }

    #[test]
    fn module_blocks_round_trip() {
        let json = r#"{"dim": 1, "lambda": "0", "mul": [[0, 0, 0, "1"]], "comul": [],
            "module": {"dim": 2, "action": [[0, 1, 0, "3"]], "alpha": [["1", "0"], ["0", "2"]]},
            "comodule": {"dim": 2, "coaction": [[1, 0, 1, "-1/2"]]}}"#;
        let m = Model::parse(json).unwrap();
        assert_eq!(m.infer_kind().unwrap(), Kind::HopfModule);
        let h = m.hopf_module().unwrap();
        assert_eq!(h.module.get(0, 1, 0).to_string(), "3");
        assert_eq!(h.comodule.get(1, 0, 1).to_string(), "-1/2");
        let again = Model::parse(&m.to_json()).unwrap();
        assert_eq!(again, m);
    }
}
