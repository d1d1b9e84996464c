use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::repo_model::RepoSnapshot;

use super::facts::{module_path, CodeFacts};
use super::AnalysisError;

/// Distance assigned to files that no root reaches (pure import cycles).
pub const MAX_DIST: u64 = 1_000_000;

/// Per-file structural measurements derived from the import graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphNode {
    pub path: String,
    pub import_count: usize,
    pub importer_count: usize,
    pub is_root: bool,
    pub is_leaf: bool,
    pub dist_from_root: u64,
    /// Classes anywhere in the repo that inherit from a class defined here.
    pub inherited_count: usize,
    /// Largest number of subclasses of any single class defined here.
    pub max_class_inherited: usize,
}

/// Import and inheritance structure of a repository's Python files.
///
/// Edges point from importer to imported file and only connect files that
/// exist in the repository.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImportGraph {
    nodes: Vec<GraphNode>,
    edges: BTreeSet<(usize, usize)>,
}

impl ImportGraph {
    pub fn nodes(&self) -> &[GraphNode] {
        &self.nodes
    }

    pub fn node(&self, path: &str) -> Option<&GraphNode> {
        self.index_of(path).map(|i| &self.nodes[i])
    }

    pub fn edges(&self) -> impl Iterator<Item = (&str, &str)> {
        self.edges
            .iter()
            .map(|&(a, b)| (self.nodes[a].path.as_str(), self.nodes[b].path.as_str()))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, from: &str, to: &str) -> bool {
        match (self.index_of(from), self.index_of(to)) {
            (Some(a), Some(b)) => self.edges.contains(&(a, b)),
            _ => false,
        }
    }

    fn index_of(&self, path: &str) -> Option<usize> {
        self.nodes.binary_search_by(|n| n.path.as_str().cmp(path)).ok()
    }
}

/// Maps dotted module names to files of the repository.
///
/// Files under a top-level `src/` directory are also reachable without the
/// `src.` prefix.
pub(crate) struct ModuleIndex {
    by_module: HashMap<String, usize>,
}

impl ModuleIndex {
    pub(crate) fn new<'a>(paths: impl IntoIterator<Item = &'a str>) -> Self {
        let mut by_module = HashMap::new();
        let mut aliases = Vec::new();
        for (i, path) in paths.into_iter().enumerate() {
            let module = module_path(path);
            if module.is_empty() {
                continue;
            }
            if let Some(stripped) = module.strip_prefix("src.") {
                aliases.push((stripped.to_string(), i));
            }
            by_module.entry(module).or_insert(i);
        }
        for (module, i) in aliases {
            by_module.entry(module).or_insert(i);
        }
        ModuleIndex { by_module }
    }

    pub(crate) fn get(&self, module: &str) -> Option<usize> {
        self.by_module.get(module).copied()
    }

    /// The file with the longest module name equal to `module` or to one of
    /// its package prefixes.
    pub(crate) fn longest_prefix(&self, module: &str) -> Option<usize> {
        let mut candidate = module;
        loop {
            if let Some(i) = self.get(candidate) {
                return Some(i);
            }
            candidate = &candidate[..candidate.rfind('.')?];
        }
    }
}

/// Files imported by one file, in resolution order.
///
/// `import X` resolves to the file whose module is `X`. `from X import n`
/// resolves to module `X.n` when that is a repo file, otherwise to `X`.
fn resolve_imports(facts: &CodeFacts, index: &ModuleIndex) -> Vec<usize> {
    let mut out = Vec::new();
    for stmt in &facts.imports {
        if stmt.names.is_empty() {
            out.extend(index.get(&stmt.module));
            continue;
        }
        let mut module_hit = false;
        for name in &stmt.names {
            match index.get(&format!("{}.{}", stmt.module, name)) {
                Some(i) => out.push(i),
                None => module_hit = true,
            }
        }
        if module_hit {
            out.extend(index.get(&stmt.module));
        }
    }
    out
}

pub fn build_import_graph(
    snapshot: &RepoSnapshot,
    facts: &BTreeMap<String, CodeFacts>,
) -> Result<ImportGraph, AnalysisError> {
    let files: Vec<&CodeFacts> = snapshot
        .python_files()
        .map(|f| {
            facts
                .get(f.path())
                .ok_or_else(|| AnalysisError::MissingFacts(f.path().to_string()))
        })
        .collect::<Result<_, _>>()?;
    let n = files.len();
    let index = ModuleIndex::new(files.iter().map(|f| f.path.as_str()));

    let mut edges = BTreeSet::new();
    let mut imported_by_file: Vec<BTreeSet<usize>> = Vec::with_capacity(n);
    for (a, f) in files.iter().enumerate() {
        let targets: BTreeSet<usize> = resolve_imports(f, &index).into_iter().filter(|&b| b != a).collect();
        for &b in &targets {
            edges.insert((a, b));
        }
        imported_by_file.push(targets);
    }

    let mut out_deg = vec![0usize; n];
    let mut in_deg = vec![0usize; n];
    let mut succ = vec![Vec::new(); n];
    for &(a, b) in &edges {
        out_deg[a] += 1;
        in_deg[b] += 1;
        succ[a].push(b);
    }

    let is_root: Vec<bool> = (0..n).map(|i| in_deg[i] == 0).collect();
    let mut dist = vec![MAX_DIST; n];
    let mut queue = VecDeque::new();
    for i in (0..n).filter(|&i| is_root[i]) {
        dist[i] = 0;
        queue.push_back(i);
    }
    while let Some(u) = queue.pop_front() {
        for &v in &succ[u] {
            if dist[v] == MAX_DIST {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }

    let (inherited, max_class) = inheritance_counts(&files, &imported_by_file);

    let nodes = files
        .iter()
        .enumerate()
        .map(|(i, f)| GraphNode {
            path: f.path.clone(),
            import_count: out_deg[i],
            importer_count: in_deg[i],
            is_root: is_root[i],
            is_leaf: out_deg[i] == 0,
            dist_from_root: dist[i],
            inherited_count: inherited[i],
            max_class_inherited: max_class[i],
        })
        .collect();
    Ok(ImportGraph { nodes, edges })
}

/// Resolves every class's base names to defining files.
///
/// A bare base name resolves to a class of that name defined in the same
/// file, else in an imported file (first in path order). A dotted base
/// `m.Name` resolves through `m`, which is either a module name or an
/// `import ... as m` alias.
fn inheritance_counts(files: &[&CodeFacts], imported: &[BTreeSet<usize>]) -> (Vec<usize>, Vec<usize>) {
    let n = files.len();
    let index = ModuleIndex::new(files.iter().map(|f| f.path.as_str()));
    let defines = |file: usize, class: &str| files[file].class_defs.iter().any(|c| c.name == class);

    // (defining file, class name) -> set of inheriting (file, class index)
    let mut subclasses: BTreeMap<(usize, &str), BTreeSet<(usize, usize)>> = BTreeMap::new();
    for (a, f) in files.iter().enumerate() {
        let aliases: HashMap<&str, &str> = f
            .imports
            .iter()
            .filter_map(|s| s.alias.as_deref().map(|al| (al, s.module.as_str())))
            .collect();
        for (ci, class) in f.class_defs.iter().enumerate() {
            for base in &class.base_names {
                let target = match base.rsplit_once('.') {
                    Some((prefix, name)) => {
                        let module = aliases.get(prefix).copied().unwrap_or(prefix);
                        index.get(module).filter(|&t| defines(t, name)).map(|t| (t, name))
                    }
                    None if base != &class.name && defines(a, base) => Some((a, base.as_str())),
                    None => imported[a]
                        .iter()
                        .copied()
                        .find(|&t| defines(t, base))
                        .map(|t| (t, base.as_str())),
                };
                if let Some(key) = target {
                    subclasses.entry(key).or_default().insert((a, ci));
                }
            }
        }
    }

    let mut inheriting: Vec<BTreeSet<(usize, usize)>> = vec![BTreeSet::new(); n];
    let mut max_class = vec![0usize; n];
    for ((file, _), subs) in &subclasses {
        inheriting[*file].extend(subs.iter().copied());
        max_class[*file] = max_class[*file].max(subs.len());
    }
    (inheriting.iter().map(BTreeSet::len).collect(), max_class)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code_analysis::analyze;
    use crate::repo_model::SourceFile;
    use proptest::prelude::*;

    fn graph_of(files: &[(&str, &str)]) -> ImportGraph {
        let files = files.iter().map(|(p, c)| SourceFile::new(*p, *c).unwrap()).collect();
        let snap = RepoSnapshot::new(None, files).unwrap();
        analyze(&snap).unwrap().1
    }

    #[test]
    fn two_node_chain() {
        let g = graph_of(&[("a.py", "import b\n"), ("b.py", "x = 1\n")]);
        let a = g.node("a.py").unwrap();
        let b = g.node("b.py").unwrap();
        assert!(a.is_root && !a.is_leaf);
        assert_eq!((a.dist_from_root, a.import_count, a.importer_count), (0, 1, 0));
        assert!(!b.is_root && b.is_leaf);
        assert_eq!((b.dist_from_root, b.import_count, b.importer_count), (1, 0, 1));
    }

    #[test]
    fn pure_cycle_gets_sentinel() {
        let g = graph_of(&[("a.py", "import b\n"), ("b.py", "import a\n")]);
        for n in g.nodes() {
            assert!(!n.is_root);
            assert_eq!(n.dist_from_root, MAX_DIST);
        }
    }

    #[test]
    fn isolated_file_is_root_and_leaf() {
        let g = graph_of(&[("solo.py", "print(1)\n")]);
        let n = &g.nodes()[0];
        assert!(n.is_root && n.is_leaf);
        assert_eq!(n.dist_from_root, 0);
    }

    #[test]
    fn inherited_three_times() {
        let g = graph_of(&[
            ("base.py", "class Base:\n    pass\n"),
            ("x.py", "from base import Base\nclass X(Base):\n    pass\n"),
            ("y.py", "from base import Base\nclass Y(Base):\n    pass\n"),
            ("z.py", "from base import Base\nclass Z(Base):\n    pass\n"),
        ]);
        let base = g.node("base.py").unwrap();
        assert_eq!(base.inherited_count, 3);
        assert_eq!(base.max_class_inherited, 3);
        assert_eq!(base.importer_count, 3);
    }

    #[test]
    fn base_name_needs_import() {
        let g = graph_of(&[
            ("base.py", "class Base:\n    pass\n"),
            ("x.py", "class X(Base):\n    pass\n"),
        ]);
        assert_eq!(g.node("base.py").unwrap().inherited_count, 0);
    }

    #[test]
    fn dotted_and_aliased_bases() {
        let g = graph_of(&[
            ("pkg/__init__.py", ""),
            ("pkg/base.py", "class Base:\n    pass\nclass Local(Base):\n    pass\n"),
            ("a.py", "import pkg.base\nclass A(pkg.base.Base):\n    pass\n"),
            ("b.py", "import pkg.base as pb\nclass B(pb.Base):\n    pass\n"),
        ]);
        let base = g.node("pkg/base.py").unwrap();
        assert_eq!(base.inherited_count, 3);
        assert_eq!(base.max_class_inherited, 3);
    }

    #[test]
    fn from_package_import_submodule() {
        let g = graph_of(&[
            ("pkg/__init__.py", ""),
            ("pkg/util.py", "def f():\n    pass\n"),
            ("run.py", "from pkg import util\nfrom pkg import VERSION\n"),
        ]);
        assert!(g.has_edge("run.py", "pkg/util.py"));
        assert!(g.has_edge("run.py", "pkg/__init__.py"));
        let g2 = graph_of(&[
            ("pkg/__init__.py", ""),
            ("pkg/util.py", "def f():\n    pass\n"),
            ("run.py", "from pkg import util\n"),
        ]);
        assert!(!g2.has_edge("run.py", "pkg/__init__.py"));
    }

    #[test]
    fn src_layout_resolves() {
        let g = graph_of(&[
            ("src/pkg/__init__.py", ""),
            ("src/pkg/core.py", "x = 1\n"),
            ("src/pkg/cli.py", "from pkg.core import x\n"),
        ]);
        assert!(g.has_edge("src/pkg/cli.py", "src/pkg/core.py"));
    }

    #[test]
    fn missing_facts_is_an_error() {
        let snap = RepoSnapshot::new(None, vec![SourceFile::new("a.py", "").unwrap()]).unwrap();
        assert!(matches!(
            build_import_graph(&snap, &BTreeMap::new()),
            Err(AnalysisError::MissingFacts(_))
        ));
    }

    fn dag_strategy() -> impl Strategy<Value = Vec<Vec<usize>>> {
        (1usize..10).prop_flat_map(|n| {
            (0..n)
                .map(|i| prop::collection::vec(0..n.max(1), 0..3).prop_map(move |t| {
                    // only import higher-numbered modules to stay acyclic
                    t.into_iter().filter(|&j| j > i).collect::<Vec<_>>()
                }))
                .collect::<Vec<_>>()
        })
    }

    fn render(imports: &[Vec<usize>]) -> Vec<(String, String)> {
        imports
            .iter()
            .enumerate()
            .map(|(i, ts)| {
                let body: String = ts.iter().map(|t| format!("import m{t}\n")).collect();
                (format!("m{i}.py"), body)
            })
            .collect()
    }

    proptest! {
        #[test]
        fn dag_distance_properties(imports in dag_strategy(), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut files = render(&imports);
            let owned: Vec<(&str, &str)> = files.iter().map(|(p, c)| (p.as_str(), c.as_str())).collect();
            let g = graph_of(&owned);

            let n = g.nodes().len();
            let out: usize = g.nodes().iter().map(|x| x.import_count).sum();
            let inn: usize = g.nodes().iter().map(|x| x.importer_count).sum();
            prop_assert_eq!(out, g.edge_count());
            prop_assert_eq!(inn, g.edge_count());
            for node in g.nodes() {
                prop_assert!(node.dist_from_root <= n as u64);
                prop_assert_eq!(node.dist_from_root == 0, node.is_root);
                if node.dist_from_root > 0 {
                    let has_pred = g.edges().any(|(a, b)| {
                        b == node.path && g.node(a).unwrap().dist_from_root + 1 == node.dist_from_root
                    });
                    prop_assert!(has_pred);
                }
            }

            // permuting input order yields the same graph
            files.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let shuffled: Vec<(&str, &str)> = files.iter().map(|(p, c)| (p.as_str(), c.as_str())).collect();
            prop_assert_eq!(graph_of(&shuffled), g);
        }
    }
}
