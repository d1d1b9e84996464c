use serde::{Deserialize, Serialize};

use crate::code_analysis::{CodeFacts, ImportGraph};
use crate::repo_model::base_name;
use crate::scalar::Scalar;
use crate::weak_supervision::ENTRY_NAMES;

use super::RankerError;

pub const NUM_FEATURES: usize = 14;

pub const FEATURE_NAMES: [&str; NUM_FEATURES] = [
    "f1_main_fn",
    "f2_argparser",
    "f3_webframework",
    "f4b_char_length",
    "f5_main_in_name",
    "f6_entrypointish",
    "f7_dunder_init",
    "f8_testish",
    "f9_dir_depth",
    "f10b_dist_from_top",
    "f11_import_bottom",
    "f12_import_count",
    "f13_importer_count",
    "f14b_inherited_count",
];

/// Ranking features of one file. Indicator fields are 0 or 1.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FeatureVector {
    pub f1_main_fn: u64,
    pub f2_argparser: u64,
    pub f3_webframework: u64,
    pub f4b_char_length: u64,
    pub f5_main_in_name: u64,
    pub f6_entrypointish: u64,
    pub f7_dunder_init: u64,
    pub f8_testish: u64,
    pub f9_dir_depth: u64,
    pub f10b_dist_from_top: u64,
    pub f11_import_bottom: u64,
    pub f12_import_count: u64,
    pub f13_importer_count: u64,
    pub f14b_inherited_count: u64,
}

impl FeatureVector {
    pub fn to_array(&self) -> [u64; NUM_FEATURES] {
        [
            self.f1_main_fn,
            self.f2_argparser,
            self.f3_webframework,
            self.f4b_char_length,
            self.f5_main_in_name,
            self.f6_entrypointish,
            self.f7_dunder_init,
            self.f8_testish,
            self.f9_dir_depth,
            self.f10b_dist_from_top,
            self.f11_import_bottom,
            self.f12_import_count,
            self.f13_importer_count,
            self.f14b_inherited_count,
        ]
    }

    pub fn from_array(v: [u64; NUM_FEATURES]) -> Self {
        FeatureVector {
            f1_main_fn: v[0],
            f2_argparser: v[1],
            f3_webframework: v[2],
            f4b_char_length: v[3],
            f5_main_in_name: v[4],
            f6_entrypointish: v[5],
            f7_dunder_init: v[6],
            f8_testish: v[7],
            f9_dir_depth: v[8],
            f10b_dist_from_top: v[9],
            f11_import_bottom: v[10],
            f12_import_count: v[11],
            f13_importer_count: v[12],
            f14b_inherited_count: v[13],
        }
    }

    pub fn values<F: Scalar>(&self) -> [F; NUM_FEATURES] {
        self.to_array().map(|x| F::from_u64(x).expect("feature fits in a float"))
    }
}

fn ind(b: bool) -> u64 {
    u64::from(b)
}

pub fn extract_features(path: &str, facts: &CodeFacts, graph: &ImportGraph) -> Result<FeatureVector, RankerError> {
    let node = graph
        .node(path)
        .filter(|_| facts.path == path)
        .ok_or_else(|| RankerError::MissingAnalysis(path.to_string()))?;
    let base = base_name(path);
    Ok(FeatureVector {
        f1_main_fn: ind(facts.function_names.iter().any(|n| n.to_lowercase().contains("main"))),
        f2_argparser: ind(facts.has_arg_parser),
        f3_webframework: ind(facts.has_web_framework),
        f4b_char_length: facts.char_length as u64,
        f5_main_in_name: ind(base.to_lowercase().contains("main")),
        f6_entrypointish: ind(ENTRY_NAMES.contains(&base)),
        f7_dunder_init: ind(base == "__init__.py"),
        f8_testish: ind(base.starts_with("test_")),
        f9_dir_depth: path.matches('/').count() as u64,
        f10b_dist_from_top: node.dist_from_root,
        f11_import_bottom: ind(node.is_leaf),
        f12_import_count: node.import_count as u64,
        f13_importer_count: node.importer_count as u64,
        f14b_inherited_count: node.inherited_count as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code_analysis::analyze;
    use crate::repo_model::{RepoSnapshot, SourceFile};

    fn features_of(files: &[(&str, &str)], path: &str) -> FeatureVector {
        let files = files.iter().map(|(p, c)| SourceFile::new(*p, *c).unwrap()).collect();
        let snap = RepoSnapshot::new(None, files).unwrap();
        let (facts, graph) = analyze(&snap).unwrap();
        extract_features(path, &facts[path], &graph).unwrap()
    }

    #[test]
    fn dir_depth_and_dunder() {
        assert_eq!(features_of(&[("a/b/c.py", "")], "a/b/c.py").f9_dir_depth, 2);
        let f = features_of(&[("pkg/__init__.py", "")], "pkg/__init__.py");
        assert_eq!(f.f7_dunder_init, 1);
        assert_eq!(f.f9_dir_depth, 1);
    }

    #[test]
    fn leaf_imported_by_three() {
        let files = [
            ("leaf.py", "X = 1\n"),
            ("a.py", "import leaf\n"),
            ("b.py", "import leaf\n"),
            ("c.py", "from leaf import X\n"),
        ];
        let f = features_of(&files, "leaf.py");
        assert_eq!((f.f11_import_bottom, f.f12_import_count, f.f13_importer_count), (1, 0, 3));
        assert_eq!(f.f10b_dist_from_top, 1);
    }

    #[test]
    fn entry_point_shape() {
        let main = "import argparse\nfrom pkg import util\n\ndef main():\n    argparse.ArgumentParser()\n";
        let files = [("pkg/__main__.py", main), ("pkg/util.py", "def helper():\n    pass\n"), ("pkg/__init__.py", "")];
        let f = features_of(&files, "pkg/__main__.py");
        assert_eq!(f.f1_main_fn, 1);
        assert_eq!(f.f2_argparser, 1);
        assert_eq!(f.f5_main_in_name, 1);
        assert_eq!(f.f6_entrypointish, 1);
        assert_eq!(f.f10b_dist_from_top, 0);
        assert_eq!(f.f12_import_count, 1);
        assert_eq!(f.f4b_char_length, main.chars().count() as u64);
    }

    #[test]
    fn missing_analysis() {
        let files = vec![SourceFile::new("a.py", "").unwrap()];
        let snap = RepoSnapshot::new(None, files).unwrap();
        let (facts, graph) = analyze(&snap).unwrap();
        assert!(matches!(
            extract_features("b.py", &facts["a.py"], &graph),
            Err(RankerError::MissingAnalysis(_))
        ));
    }

    #[test]
    fn array_round_trip() {
        let v: [u64; NUM_FEATURES] = std::array::from_fn(|i| i as u64 * 3);
        assert_eq!(FeatureVector::from_array(v).to_array(), v);
    }
}
