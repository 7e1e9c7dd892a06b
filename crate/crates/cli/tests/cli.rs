use qrflip_cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("qrflip").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

const B1_JSON: &str = r#"{"version":1,"ec":"Q","mask":3,"text":"Id: 1234567","blocks":[{"data":[64,180,150,67,162,3,19,35,51,67,83,99,112],"ec":[196,144,22,34,115,74,89,202,212,234,197,39,150]}],"interleaved":[64,180,150,67,162,3,19,35,51,67,83,99,112,196,144,22,34,115,74,89,202,212,234,197,39,150]}
"#;

#[test]
fn encode_json_golden() {
    let out = ok(&[
        "encode",
        "--text",
        "Id: 1234567",
        "--version",
        "1",
        "--ec",
        "Q",
        "--json",
        "-",
    ]);
    assert_eq!(out, B1_JSON);
    let again = ok(&[
        "encode",
        "--text",
        "Id: 1234567",
        "--version",
        "1",
        "--ec",
        "Q",
        "--json",
        "-",
    ]);
    assert_eq!(out, again);
}

#[test]
fn encode_hex_payload_matches_text() {
    let a = ok(&[
        "encode",
        "--text",
        "Id: 1234567",
        "--version",
        "1",
        "--ec",
        "Q",
        "--mask",
        "3",
        "--json",
        "-",
    ]);
    let b = ok(&[
        "encode",
        "--hex",
        "49643a2031323334353637",
        "--version",
        "1",
        "--ec",
        "Q",
        "--mask",
        "3",
        "--json",
        "-",
    ]);
    assert_eq!(a, b);
}

#[test]
fn encode_ascii_default() {
    let out = ok(&[
        "encode",
        "--text",
        "a",
        "--version",
        "1",
        "--ec",
        "L",
        "--mask",
        "0",
    ]);
    assert_eq!(out.lines().count(), 29);
    assert!(out
        .lines()
        .nth(4)
        .unwrap()
        .starts_with("        ██████████████"));
}

#[test]
fn pbm_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sym.pbm");
    let p = path.to_str().unwrap();
    ok(&[
        "encode",
        "--text",
        "Id: bhavuksikka",
        "--version",
        "2",
        "--ec",
        "M",
        "--mask",
        "5",
        "--pbm",
        p,
    ]);
    let pbm = std::fs::read_to_string(&path).unwrap();
    assert!(pbm.starts_with("P1\n33 33\n"));
    assert_eq!(
        ok(&["decode", "--pbm", p]),
        "text: Id: bhavuksikka\nversion: 2\nec: M\nmask: 5\nerrors per block: 0\n"
    );
}

#[test]
fn rs_golden() {
    let data = "40b49643a20313233343536370";
    let enc = ok(&["rs", "encode", "--n", "26", "--k", "13", "--data", data]);
    assert_eq!(
        enc,
        "40b49643a20313233343536370c4901622734a59cad4eac52796\n"
    );
    let mut bad = enc.trim().to_string();
    bad.replace_range(0..2, "ff");
    bad.replace_range(30..32, "00");
    let dec = ok(&["rs", "decode", "--n", "26", "--k", "13", "--data", &bad]);
    assert_eq!(dec, format!("{}\nerrors: 2\n", enc.trim()));
}

#[test]
fn attack_outputs() {
    let base = [
        "attack",
        "--text",
        "Id: 1234567",
        "--target",
        "Id: 1234566",
        "--version",
        "1",
        "--ec",
        "Q",
    ];
    let summary = ok(&base);
    assert_eq!(
        summary,
        "flips: 24 of 208 bits (11.54%)\n\
         byte   12  block 0  xor 0x10  bits 1\n\
         byte   13  block 0  xor 0x78  bits 4\n\
         byte   14  block 0  xor 0xE4  bits 4\n\
         byte   16  block 0  xor 0x0D  bits 3\n\
         byte   18  block 0  xor 0x0D  bits 3\n\
         byte   20  block 0  xor 0xD0  bits 3\n\
         byte   22  block 0  xor 0x8A  bits 3\n\
         byte   24  block 0  xor 0xA8  bits 3\n"
    );
    let mut args = base.to_vec();
    args.extend(["--json", "-"]);
    let json: serde_json::Value = serde_json::from_str(&ok(&args)).unwrap();
    assert_eq!(json["flips"], 24);
    assert_eq!(json["percent"], 11.54);
    assert_eq!(json["bytes"].as_array().unwrap().len(), 8);
    assert_eq!(
        json["bytes"][0],
        serde_json::json!({"index": 12, "xor": "0x10", "bits": 1})
    );
    assert_eq!(json["pixels"].as_array().unwrap().len(), 24);

    let mut args = base.to_vec();
    args.extend(["--pbm-diff", "-"]);
    let pbm = ok(&args);
    assert!(pbm.starts_with("P1\n29 29\n"));
    assert_eq!(
        pbm.lines()
            .skip(2)
            .flat_map(|l| l.split(' '))
            .filter(|&p| p == "1")
            .count(),
        24
    );
}

#[test]
fn nearest_golden() {
    let out = ok(&[
        "nearest",
        "--text",
        "Some binary text.",
        "--version",
        "1",
        "--ec",
        "L",
        "--alphabet",
        "printable",
    ]);
    assert_eq!(
        out,
        "minimum flips: 7 (3.37%)\n\
         14 0x78 -> 0x79 xor 0x01  Some binary teyt.\n\
         15 0x74 -> 0x34 xor 0x40  Some binary tex4.\n"
    );
    let single = ok(&[
        "nearest",
        "--text",
        "Id: bhavuksikka",
        "--version",
        "1",
        "--ec",
        "L",
        "--alphabet",
        "alnum",
        "--threads",
        "1",
    ]);
    let multi = ok(&[
        "nearest",
        "--text",
        "Id: bhavuksikka",
        "--version",
        "1",
        "--ec",
        "L",
        "--alphabet",
        "alnum",
        "--threads",
        "3",
    ]);
    assert_eq!(single, multi);
    assert!(
        single.starts_with("minimum flips: 8 (3.85%)\n8 0x75 -> 0x59 xor 0x2C  Id: bhavYksikka\n")
    );
}

#[test]
fn table_golden() {
    assert_eq!(
        ok(&["table", "--version", "1", "--ec", "L"]),
        "14,15 | 0x01 / 0x40,0x80 | 7\n"
    );
    assert_eq!(
        ok(&["table", "--version", "2", "--threads", "2"]),
        "L | 3,19 | 0x26,0x4C / 0x4B | 9\n\
         M | 0 | 0x54,0xA8 | 15\n\
         Q | 2,6,11 | 0x04 / 0x01 / 0x41 | 23\n\
         H | 4 | 0x88 | 30\n"
    );
}

#[test]
fn gf_table_golden() {
    let out = ok(&["gf-table", "--m", "3", "--poly", "b"]);
    assert_eq!(
        out,
        "000 | 0           | -\n\
         100 | 1           | β^0\n\
         010 | x           | β^1\n\
         001 | x^2         | β^2\n\
         110 | 1 + x       | β^3\n\
         011 | x + x^2     | β^4\n\
         111 | 1 + x + x^2 | β^5\n\
         101 | 1 + x^2     | β^6\n"
    );
    let gf16 = ok(&["gf-table", "--m", "4", "--poly", "0x13"]);
    assert_eq!(
        gf16.lines().nth(8).unwrap(),
        "1101 | 1 + x + x^3       | β^7"
    );
}

#[test]
fn nif_golden() {
    assert_eq!(ok(&["nif", "--digits", "51234511"]), "X\n");
    assert_eq!(
        ok(&["nif", "--digits", "18279322", "--letter", "G"]),
        "expected A, received G: error\n"
    );
    assert_eq!(
        ok(&["nif", "--digits", "18279322", "--letter", "A"]),
        "expected A, received A: ok\n"
    );
}

#[test]
fn error_lines() {
    let (code, out, err) = call(&["encode", "--text", "hi", "--version", "1", "--ec", "Z"]);
    assert_eq!((code, out.as_str()), (2, ""));
    assert!(err.starts_with("error[usage]: invalid value 'Z'"), "{err}");

    let (code, _, err) = call(&[
        "encode",
        "--text",
        &"a".repeat(18),
        "--version",
        "1",
        "--ec",
        "L",
    ]);
    assert_eq!(code, 1);
    assert_eq!(
        err,
        "error[overflow]: text of 18 bytes exceeds capacity 17\n"
    );

    let (code, _, err) = call(&["encode", "--text", "a", "--version", "41", "--ec", "L"]);
    assert_eq!(code, 1);
    assert_eq!(
        err,
        "error[unsupported-version]: unsupported QR version 41\n"
    );

    let (code, _, err) = call(&["gf-table", "--m", "4", "--poly", "1f"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error[not-primitive]"), "{err}");

    let (code, _, err) = call(&["nif", "--digits", "123"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error[bad-format]"), "{err}");

    let (code, _, err) = call(&["decode", "--pbm", "/nonexistent/x.pbm"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error[io]: /nonexistent/x.pbm"), "{err}");

    let (code, _, err) = call(&["frobnicate"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error[usage]"));

    let (code, _, err) = call(&[
        "rs",
        "decode",
        "--n",
        "26",
        "--k",
        "19",
        "--data",
        &"ab".repeat(26),
    ]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error[decode-failure]"), "{err}");
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("nearest"));
}
