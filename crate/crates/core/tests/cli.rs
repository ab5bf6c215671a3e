use std::process::Command;

fn bosonic(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_bosonic"))
        .args(args)
        .env_remove("BOSONIC_JOBS")
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

#[test]
fn hl_r_json() {
    let (code, out) = bosonic(&["hl-r", "--rank", "2", "--lambda", "1,0", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["text"], "z1 + z2");
    assert_eq!(v["poly"]["rank"], 2);
}

#[test]
fn monostatic_example() {
    let (code, out) = bosonic(&[
        "verify",
        "--check",
        "monostatic",
        "--rank",
        "3",
        "--lambda",
        "4,2,2",
        "--top-flag",
        "1,3,2",
        "--json",
    ]);
    assert_eq!(code, 0, "{out}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["value"], "z1^4*z2^2*z3^2*t");
}

#[test]
fn sigma_methods_agree_byte_for_byte() {
    let run = |m: &str| {
        bosonic(&[
            "sigma", "--rank", "3", "--lambda", "2,-1,0", "--w", "3,1,2", "--method", m, "--json",
        ])
    };
    let (a, b) = (run("lattice"), run("tau"));
    assert_eq!(a.0, 0);
    assert_eq!(a, b);
}

#[test]
fn exit_codes() {
    assert_eq!(
        bosonic(&[
            "verify",
            "--check",
            "ybe-colored",
            "--rank",
            "2",
            "--mmax",
            "1"
        ])
        .0,
        0
    );
    assert_eq!(
        bosonic(&[
            "verify",
            "--check",
            "ybe-colored",
            "--rank",
            "2",
            "--mmax",
            "1",
            "--inject-fault",
            "flip-c-sign"
        ])
        .0,
        1
    );
    assert_eq!(bosonic(&["hl-p", "--lambda", "1,2"]).0, 2);
    assert_eq!(bosonic(&["sigma", "--lambda", "1,0", "--w", "1,2,3"]).0, 2);
    assert_eq!(bosonic(&["verify", "--check", "no-such-check"]).0, 2);
}

#[test]
fn jobs_do_not_change_output() {
    let args = [
        "verify", "--check", "demeval", "--lambda", "2,1,0", "--json",
    ];
    let one = bosonic(&args);
    let out = Command::new(env!("CARGO_BIN_EXE_bosonic"))
        .args(args)
        .env("BOSONIC_JOBS", "4")
        .output()
        .unwrap();
    assert_eq!(one.0, 0);
    assert_eq!(one.1, String::from_utf8(out.stdout).unwrap());
}

#[test]
fn other_subcommands() {
    let (code, out) = bosonic(&[
        "partition-function",
        "--model",
        "colored",
        "--lambda",
        "1,0",
        "--top-flag",
        "1,2",
        "--right-flag",
        "2,1",
    ]);
    assert_eq!((code, out.as_str()), (0, "z2\n"));
    let (code, out) = bosonic(&["tau", "--lambda", "1,0", "--w", "2,1", "--y", "1,2"]);
    assert_eq!((code, out.as_str()), (0, "z2\n"));
    let (code, out) = bosonic(&[
        "demazure-apply",
        "--op",
        "partial",
        "--rank",
        "2",
        "--i",
        "1",
        "--poly",
        "z1",
    ]);
    assert_eq!((code, out.as_str()), (0, "z1 + z2\n"));
    let (code, out) = bosonic(&["dump-weights", "--family", "P", "--nmax", "0", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 3);
    let (code, out) = bosonic(&[
        "verify",
        "--check",
        "operators-random",
        "--seed",
        "3",
        "--samples",
        "5",
    ]);
    assert_eq!(code, 0, "{out}");
}
