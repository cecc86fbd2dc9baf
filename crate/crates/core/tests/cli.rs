use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use fht::io::accfile::{AccumulatorFile, Mode};
use fht::io::pgm::read_pgm;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn fht(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fht"))
        .args(args)
        .output()
        .expect("run fht")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn transform_matches_golden() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("a.fht");
    let res = fht(&[
        "transform",
        "--input",
        fixture("ones_2x2.pgm").to_str().unwrap(),
        "--quadrant",
        "a",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(res.status.success(), "{}", String::from_utf8_lossy(&res.stderr));
    assert_eq!(
        std::fs::read(&out).unwrap(),
        std::fs::read(fixture("ones_2x2_quadrant_a.fht")).unwrap()
    );
}

#[test]
fn attribute_prints_quadrant_and_shift() {
    let res = fht(&["attribute", "--size", "4", "--row", "0"]);
    assert!(res.status.success());
    assert_eq!(stdout(&res), "QA 3\n");
    assert_eq!(stdout(&fht(&["attribute", "--size", "4", "--row", "12"])), "QD 3\n");
}

#[test]
fn recover_outputs() {
    let res = fht(&[
        "recover",
        "--width",
        "4",
        "--height",
        "4",
        "--quadrant",
        "a",
        "--x0",
        "5",
        "--shift",
        "2",
    ]);
    assert!(res.status.success());
    assert_eq!(stdout(&res), "none\n");
    let res = fht(&[
        "recover",
        "--width",
        "4",
        "--height",
        "4",
        "--quadrant",
        "a",
        "--x0",
        "7",
        "--shift",
        "3",
    ]);
    assert_eq!(stdout(&res), "0,1\n1,2\n2,3\n");
    let res = fht(&[
        "recover",
        "--width",
        "4",
        "--height",
        "4",
        "--full-row",
        "3",
        "--x0",
        "0",
    ]);
    assert_eq!(stdout(&res), "0,0\n0,1\n0,2\n0,3\n");
}

#[test]
fn full_with_fhtshift_and_preview() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("full.fht");
    let preview = dir.path().join("full.pgm");
    let res = fht(&[
        "full",
        "--input",
        fixture("pixel_4x4.pgm").to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
        "--fhtshift",
        "--preview",
        preview.to_str().unwrap(),
    ]);
    assert!(res.status.success(), "{}", String::from_utf8_lossy(&res.stderr));
    let file = AccumulatorFile::from_bytes(&std::fs::read(&out).unwrap()).unwrap();
    assert_eq!((file.rows, file.cols, file.width, file.height), (13, 8, 4, 4));
    assert_eq!((file.mode, file.shifted), (Mode::Full, true));
    assert_eq!(file.flags(), 0b011);
    // One pixel: exactly one hit per row.
    assert_eq!(file.cells.iter().filter(|&&c| c == 1).count(), 13);
    let img = read_pgm(&std::fs::read(&preview).unwrap()).unwrap();
    assert_eq!((img.width(), img.height()), (8, 13));
    assert_eq!(img.pixels().iter().filter(|&&p| p == 255).count(), 13);
}

#[test]
fn range_writes_range_mode() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.fht");
    let res = fht(&[
        "range",
        "--input",
        fixture("pixel_4x4.pgm").to_str().unwrap(),
        "--gamma1",
        "0",
        "--gamma2",
        "45",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(res.status.success(), "{}", String::from_utf8_lossy(&res.stderr));
    let file = AccumulatorFile::from_bytes(&std::fs::read(&out).unwrap()).unwrap();
    assert_eq!(file.mode, Mode::Range);
    assert_eq!((file.rows, file.cols), (4, 8));
}

#[test]
fn exit_codes() {
    // argument errors
    assert_eq!(fht(&["transform"]).status.code(), Some(1));
    assert_eq!(fht(&["attribute", "--size", "4", "--row", "13"]).status.code(), Some(1));
    assert_eq!(
        fht(&["recover", "--width", "4", "--height", "4", "--x0", "0"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        fht(&["range", "--input", "x", "--gamma1", "0", "--gamma2", "0", "--out", "y"])
            .status
            .code(),
        Some(1)
    );
    // I/O error
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.pgm");
    let out = dir.path().join("o.fht");
    let res = fht(&[
        "transform",
        "--input",
        missing.to_str().unwrap(),
        "--quadrant",
        "a",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(res.status.code(), Some(2));
    // malformed image
    let bad = dir.path().join("bad.pgm");
    std::fs::write(&bad, b"P6\n1 1\n255\n\0\0\0").unwrap();
    let res = fht(&[
        "transform",
        "--input",
        bad.to_str().unwrap(),
        "--quadrant",
        "a",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(res.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&res.stderr).contains("unsupported magic"));
    // help is not an error
    assert_eq!(fht(&["--help"]).status.code(), Some(0));
}
