//! Command lines exercised by the golden-file and acceptance tests.

pub const CASES: &[(&str, &[&str])] = &[
    ("compose", &["compose", "tests/data/y_row.json", "tests/data/x_col.json"]),
    ("compose_shape_error", &["compose", "tests/data/x_col.json", "tests/data/x_col.json"]),
    ("compose_instance_error", &["compose", "tests/data/bool_row.json", "tests/data/x_col.json"]),
    ("compose_malformed", &["compose", "tests/data/malformed.json", "tests/data/x_col.json"]),
    ("compose_unknown_quantale", &["compose", "tests/data/unknown_quantale.json", "tests/data/x_col.json"]),
    ("compose_missing_file", &["compose", "tests/data/missing.json", "tests/data/x_col.json"]),
    ("rext_identity", &["rext", "tests/data/z_segment.json", "tests/data/identity_x.json"]),
    ("rlift_identity", &["--check", "rlift", "tests/data/identity_g.json", "tests/data/z_segment.json"]),
    ("closure_row", &["--check", "closure", "tests/data/z_segment.json", "tests/data/point_off.json"]),
    ("closure_col", &["closure", "--col", "tests/data/z_segment.json", "tests/data/col_segment.json"]),
    ("member_true", &["member", "tests/data/z_segment.json", "tests/data/point_mid.json"]),
    ("member_false", &["member", "tests/data/z_segment.json", "tests/data/point_off.json"]),
    (
        "complete_pair",
        &[
            "--check",
            "complete-pair",
            "tests/data/z_segment.json",
            "tests/data/bottom_row.json",
            "tests/data/bottom_col.json",
        ],
    ),
    ("hull_antichain", &["--check", "hull", "tests/data/antichain.json"]),
    ("hull_guard", &["hull", "tests/data/big_bool.json"]),
    ("hull_not_enumerable", &["hull", "tests/data/z_segment.json"]),
    ("laws_all", &["laws"]),
    ("laws_unknown", &["laws", "tropical"]),
    ("qcat_check_chain", &["qcat-check", "tests/data/chain3.json"]),
    ("qcat_check_violation", &["qcat-check", "tests/data/bad_metric_cat.json"]),
    ("macneille_antichain", &["--check", "macneille", "tests/data/antichain.json"]),
    ("macneille_metric", &["--check", "macneille", "tests/data/metric_qcat.json"]),
    ("concepts", &["concepts", "tests/data/context.json"]),
    ("tropical_member", &["tropical-member", "tests/data/z_segment.json", "tests/data/point_off.json"]),
    ("tropical_dual", &["--check", "tropical-dual", "tests/data/z_segment.json", "tests/data/pair_mid.json"]),
    ("tightspan", &["--check", "tightspan", "tests/data/metric.json"]),
    ("lf_bump", &["--check", "lf", "tests/data/bump.json"]),
    ("lf_dual_grid", &["lf", "tests/data/bump.json", "--dual", "tests/data/dual_grid.json"]),
    ("lf_float", &["--float", "lf", "tests/data/bump.json", "--dual", "tests/data/dual_grid.json"]),
    ("usage_error", &["frobnicate"]),
];

/// Guard exponent used for every case, so `hull_guard` trips deterministically.
pub const GUARD: u32 = 4;

/// Every verb the front end accepts; each must appear in some case.
pub const VERBS: &[&str] = &[
    "compose",
    "rext",
    "rlift",
    "closure",
    "member",
    "complete-pair",
    "hull",
    "laws",
    "qcat-check",
    "macneille",
    "concepts",
    "tropical-member",
    "tropical-dual",
    "tightspan",
    "lf",
];

pub fn render(code: i32, stdout: &str, stderr: &str) -> String {
    format!("exit: {code}\n--- stdout\n{stdout}--- stderr\n{stderr}")
}

pub fn golden_path(name: &str) -> std::path::PathBuf {
    std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.out"))
}
