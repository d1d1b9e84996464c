//! Table-driven labeling-function fixtures with hand-derived votes.

use larch_core::code_analysis::analyze;
use larch_core::repo_model::{RepoSnapshot, SourceFile};
use larch_core::weak_supervision::{apply_labeling_functions, LabelMatrix, OracleInputs, Vote, LF_NAMES};

fn matrix(name: &str, files: &[(&str, &str)], oracle: &OracleInputs) -> LabelMatrix {
    let files = files.iter().map(|(p, c)| SourceFile::new(*p, *c).unwrap()).collect();
    let snap = RepoSnapshot::new(Some(name.into()), files).unwrap();
    let (facts, graph) = analyze(&snap).unwrap();
    apply_labeling_functions(&snap, &facts, &graph, oracle)
}

fn col(m: &LabelMatrix, path: &str, lf: &str) -> Vote {
    let j = LF_NAMES.iter().position(|n| *n == lf).unwrap();
    m.row(path).unwrap_or_else(|| panic!("no row {path}"))[j]
}

const MAIN: &str = r#"import argparse

from my_tool.core import run


def main():
    parser = argparse.ArgumentParser(description="Run the tool.")
    parser.add_argument("value", help="input value")
    args = parser.parse_args()
    print(run(args.value))


if __name__ == "__main__":
    main()
"#;

const CORE: &str = r#""""Readers, writers and filters built on the shared base class."""

from my_tool.base import Base


class Reader(Base):
    pass


class Writer(Base):
    pass


class Filter(Base):
    pass


def run(value):
    return value.upper()
"#;

const SETUP: &str = r#"from setuptools import setup

setup(
    name="my-tool",
    entry_points={"console_scripts": ["my-tool=my_tool.__main__:main"]},
)
"#;

fn fixture() -> Vec<(&'static str, &'static str)> {
    vec![
        ("my_tool/__init__.py", ""),
        ("my_tool/__main__.py", MAIN),
        ("my_tool/base.py", "class Base:\n    \"\"\"Common parent.\"\"\"\n"),
        ("my_tool/core.py", CORE),
        ("my_tool/server.py", "from flask import Flask\n\napp = Flask(__name__)\n"),
        ("scripts/my_tool.py", "def main_entry():\n    pass\n"),
        ("tests/test_core.py", "from my_tool.core import run\n\n\ndef test_run():\n    assert run(\"a\") == \"A\"\n"),
        ("setup.py", SETUP),
    ]
}

fn oracle() -> OracleInputs {
    OracleInputs {
        setup_py: Some(SETUP.into()),
        pyproject: None,
        reference_readme: Some("# my-tool\n\n```python\nfrom my_tool.core import run\n```\n".into()),
    }
}

#[rustfmt::skip]
const EXPECTED: [(&str, [Vote; 14]); 7] = [
    //                       1  2  3 4a  5  6  7  8 10a 11 14a 15 16 17
    ("my_tool/__init__.py", [0, 0, 0, -1, 0, 0, -1, 0, 1, -1, 0, 0, -1, -1]),
    ("my_tool/__main__.py", [1, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 1, -1]),
    ("my_tool/base.py",     [0, 0, 0, -1, 0, 0, 0, 0, 0, -1, 1, 0, -1, -1]),
    ("my_tool/core.py",     [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 1]),
    ("my_tool/server.py",   [0, 0, 1, -1, 0, 1, 0, 0, 1, -1, 0, 0, -1, -1]),
    ("scripts/my_tool.py",  [1, 0, 0, -1, 0, 0, 0, 0, 1, -1, 0, 1, -1, -1]),
    ("tests/test_core.py",  [0, 0, 0, -1, 0, 0, 0, -1, 1, 0, 0, 0, -1, -1]),
];

fn full_table() {
    assert!(MAIN.len() >= 200 && CORE.len() >= 200, "fixture files meant to be long enough");
    let m = matrix("my-tool", &fixture(), &oracle());
    let rows: Vec<&str> = EXPECTED.iter().map(|(p, _)| *p).collect();
    assert_eq!(m.rows, rows, "setup.py is not a candidate");
    assert_eq!(m.lf_names, LF_NAMES);
    for (path, want) in EXPECTED {
        assert_eq!(m.row(path).unwrap(), &want, "votes for {path}");
    }
}

fn oracle_columns() {
    // absent oracle inputs: both oracle columns abstain everywhere
    let bare = matrix("my-tool", &fixture(), &OracleInputs::default());
    assert!(bare.column(12).chain(bare.column(13)).all(|v| v == 0));
    for (path, want) in EXPECTED {
        assert_eq!(bare.row(path).unwrap()[..12], want[..12], "non-oracle votes for {path}");
    }

    // oracle present but naming nothing in the repo: still all abstain
    let miss = OracleInputs {
        setup_py: Some(r#"setup(entry_points={"console_scripts": ["x=other.cli:main"]})"#.into()),
        pyproject: None,
        reference_readme: Some("import numpy\nfrom pandas import DataFrame\n".into()),
    };
    let m = matrix("my-tool", &fixture(), &miss);
    assert!(m.column(12).chain(m.column(13)).all(|v| v == 0));

    // readme importing the package itself hits only __init__.py
    let pkg = OracleInputs {
        reference_readme: Some("import my_tool\n".into()),
        ..OracleInputs::default()
    };
    let m = matrix("my-tool", &fixture(), &pkg);
    let lf17: Vec<Vote> = m.column(13).collect();
    assert_eq!(lf17, [1, -1, -1, -1, -1, -1, -1]);

    // `from pkg import module` resolves to the submodule
    let sub = OracleInputs {
        reference_readme: Some("from my_tool import server\n".into()),
        ..OracleInputs::default()
    };
    let m = matrix("my-tool", &fixture(), &sub);
    assert_eq!(col(&m, "my_tool/server.py", "lf17_imported_in_readme"), 1);
    assert_eq!(col(&m, "my_tool/__init__.py", "lf17_imported_in_readme"), -1);

    // pyproject scripts count as console entry points
    let py = OracleInputs {
        pyproject: Some("[project.scripts]\nmy-tool = \"my_tool.server:app\"\n".into()),
        ..OracleInputs::default()
    };
    let m = matrix("my-tool", &fixture(), &py);
    let lf16: Vec<Vote> = m.column(12).collect();
    assert_eq!(lf16, [-1, -1, -1, -1, 1, -1, -1]);
}

fn single_function_branches() {
    let none = OracleInputs::default();

    let short = "x = 1\n".repeat(33) + "#"; // 199 chars
    let exact = "x = 1\n".repeat(33) + "##"; // 200 chars
    assert_eq!((short.len(), exact.len()), (199, 200));
    let m = matrix("r", &[("a.py", &short), ("b.py", &exact)], &none);
    assert_eq!(col(&m, "a.py", "lf4a_too_short"), -1);
    assert_eq!(col(&m, "b.py", "lf4a_too_short"), 0);

    let m = matrix(
        "r",
        &[("a.py", "def Main():\n    pass\n"), ("b.py", "def domain_check():\n    pass\n"), ("c.py", "def run():\n    pass\n")],
        &none,
    );
    assert_eq!(col(&m, "a.py", "lf1_main_fn"), 1);
    assert_eq!(col(&m, "b.py", "lf1_main_fn"), 1);
    assert_eq!(col(&m, "c.py", "lf1_main_fn"), 0);

    let m = matrix(
        "r",
        &[("a.py", "import click\n"), ("b.py", "from optparse import OptionParser\n"), ("c.py", "import sys\n")],
        &none,
    );
    assert_eq!(col(&m, "a.py", "lf2_argparser"), 1);
    assert_eq!(col(&m, "b.py", "lf2_argparser"), 1);
    assert_eq!(col(&m, "c.py", "lf2_argparser"), 0);

    let m = matrix("r", &[("a.py", "from fastapi import FastAPI\n"), ("b.py", "import json\n")], &none);
    assert_eq!(col(&m, "a.py", "lf3_webframework"), 1);
    assert_eq!(col(&m, "b.py", "lf3_webframework"), 0);

    let m = matrix("r", &[("Main_loop.py", ""), ("domain.py", ""), ("util.py", "")], &none);
    assert_eq!(col(&m, "Main_loop.py", "lf5_main_in_name"), 1);
    assert_eq!(col(&m, "domain.py", "lf5_main_in_name"), 1);
    assert_eq!(col(&m, "util.py", "lf5_main_in_name"), 0);

    let names = ["cli.py", "main.py", "__main__.py", "app.py", "run.py", "manage.py", "server.py"];
    let files: Vec<(String, &str)> = names.iter().map(|n| (format!("pkg/{n}"), "")).chain([("pkg/runner.py".to_string(), "")]).collect();
    let borrowed: Vec<(&str, &str)> = files.iter().map(|(p, c)| (p.as_str(), *c)).collect();
    let m = matrix("r", &borrowed, &none);
    for n in names {
        assert_eq!(col(&m, &format!("pkg/{n}"), "lf6_entrypointish_name"), 1, "{n}");
    }
    assert_eq!(col(&m, "pkg/runner.py", "lf6_entrypointish_name"), 0);

    let m = matrix("r", &[("test_a.py", ""), ("a_test.py", ""), ("tests.py", ""), ("pkg/__init__.py", ""), ("init.py", "")], &none);
    assert_eq!(col(&m, "test_a.py", "lf8_testish_name"), -1);
    assert_eq!(col(&m, "a_test.py", "lf8_testish_name"), 0);
    assert_eq!(col(&m, "tests.py", "lf8_testish_name"), 0);
    assert_eq!(col(&m, "pkg/__init__.py", "lf7_dunder_init"), -1);
    assert_eq!(col(&m, "init.py", "lf7_dunder_init"), 0);

    // two subclasses are not enough
    let m = matrix(
        "r",
        &[("base.py", "class B:\n    pass\n"), ("kids.py", "from base import B\n\nclass X(B): pass\nclass Y(B): pass\n")],
        &none,
    );
    assert_eq!(col(&m, "base.py", "lf14a_inherited_3x"), 0);

    let m = matrix("Larch", &[("LARCH.py", ""), ("larch_util.py", "")], &none);
    assert_eq!(col(&m, "LARCH.py", "lf15_name_matches_repo"), 1);
    assert_eq!(col(&m, "larch_util.py", "lf15_name_matches_repo"), 0);
}

/// Runs every table; panics on the first mismatch.
pub fn check() {
    full_table();
    oracle_columns();
    single_function_branches();
}

#[test]
fn labeling_function_votes_match_hand_derived_table() {
    check();
}
