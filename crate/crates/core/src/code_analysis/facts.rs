use std::sync::OnceLock;

use regex::Regex;
use serde::{Deserialize, Serialize};

use crate::repo_model::SourceFile;

use super::AnalysisError;

/// Top-level packages that count as an argument parser.
pub const ARG_PARSER_MODULES: &[&str] = &["argparse", "click", "fire", "typer", "optparse", "docopt"];

/// Top-level packages that count as a web framework.
pub const WEB_FRAMEWORK_MODULES: &[&str] = &[
    "flask", "django", "fastapi", "bottle", "tornado", "aiohttp", "sanic", "starlette",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDef {
    pub name: String,
    pub base_names: Vec<String>,
}

/// One `import` or `from ... import` statement, already made absolute.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImportStatement {
    /// Dotted module named by the statement.
    pub module: String,
    /// Imported names for `from` imports; empty for plain imports.
    pub names: Vec<String>,
    /// Local alias for `import X as A`.
    pub alias: Option<String>,
}

/// Static facts about one Python file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeFacts {
    pub path: String,
    pub module_path: String,
    pub function_names: Vec<String>,
    pub class_defs: Vec<ClassDef>,
    /// Absolute dotted module names, one per import statement, in file order.
    pub import_targets: Vec<String>,
    pub imports: Vec<ImportStatement>,
    pub has_arg_parser: bool,
    pub has_web_framework: bool,
    pub char_length: usize,
}

/// Dotted module name for a repo-relative path.
///
/// `pkg/mod.py` is `pkg.mod` and `pkg/__init__.py` is `pkg`.
pub fn module_path(path: &str) -> String {
    let stem = path.strip_suffix(".py").unwrap_or(path);
    let stem = match stem.strip_suffix("/__init__") {
        Some(pkg) => pkg,
        None if stem == "__init__" => "",
        None => stem,
    };
    stem.replace('/', ".")
}

fn is_package_init(path: &str) -> bool {
    path == "__init__.py" || path.ends_with("/__init__.py")
}

struct Patterns {
    def: Regex,
    class: Regex,
    import: Regex,
    from: Regex,
}

fn patterns() -> &'static Patterns {
    static P: OnceLock<Patterns> = OnceLock::new();
    P.get_or_init(|| Patterns {
        def: Regex::new(r"^\s*(?:async\s+)?def\s+([A-Za-z_]\w*)\s*\(").unwrap(),
        class: Regex::new(r"^\s*class\s+([A-Za-z_]\w*)\s*(?:\((.*))?").unwrap(),
        import: Regex::new(r"^\s*import\s+(.+)$").unwrap(),
        from: Regex::new(r"^\s*from\s+(\.*)\s*([A-Za-z_][\w.]*)?\s+import\s+(.+)$").unwrap(),
    })
}

pub fn extract_code_facts(file: &SourceFile) -> Result<CodeFacts, AnalysisError> {
    if !file.is_python() {
        return Err(AnalysisError::NotPythonFile(file.path().to_string()));
    }
    let content = file.content();
    let module_path = module_path(file.path());
    let package = if is_package_init(file.path()) {
        module_path.clone()
    } else {
        match module_path.rfind('.') {
            Some(i) => module_path[..i].to_string(),
            None => String::new(),
        }
    };

    let p = patterns();
    let mut facts = CodeFacts {
        path: file.path().to_string(),
        module_path,
        function_names: Vec::new(),
        class_defs: Vec::new(),
        import_targets: Vec::new(),
        imports: Vec::new(),
        has_arg_parser: content.contains("ArgumentParser("),
        has_web_framework: false,
        char_length: content.chars().count(),
    };

    let mut lexer = LineLexer::default();
    for raw in content.lines() {
        let Some(line) = lexer.code_of(raw) else {
            continue;
        };
        if let Some(c) = p.def.captures(&line) {
            facts.function_names.push(c[1].to_string());
        } else if let Some(c) = p.class.captures(&line) {
            let bases = c.get(2).map(|m| parse_bases(m.as_str())).unwrap_or_default();
            facts.class_defs.push(ClassDef {
                name: c[1].to_string(),
                base_names: bases,
            });
        } else if let Some(c) = p.import.captures(&line) {
            for item in split_list(&c[1]) {
                let mut parts = item.split_whitespace();
                let Some(module) = parts.next().filter(|m| is_dotted_name(m)) else {
                    continue;
                };
                let alias = match (parts.next(), parts.next()) {
                    (Some("as"), Some(a)) => Some(a.to_string()),
                    _ => None,
                };
                facts.imports.push(ImportStatement {
                    module: module.to_string(),
                    names: Vec::new(),
                    alias,
                });
            }
        } else if let Some(c) = p.from.captures(&line) {
            let level = c.get(1).map_or(0, |m| m.as_str().len());
            let rel = c.get(2).map_or("", |m| m.as_str());
            let Some(module) = resolve_relative(&package, level, rel) else {
                continue;
            };
            let names = split_list(&c[3])
                .filter_map(|item| item.split_whitespace().next().map(str::to_string))
                .filter(|n| n != "*" && is_dotted_name(n))
                .collect();
            facts.imports.push(ImportStatement {
                module,
                names,
                alias: None,
            });
        }
    }

    facts.import_targets = facts.imports.iter().map(|i| i.module.clone()).collect();
    let first_segments = || facts.import_targets.iter().map(|t| t.split('.').next().unwrap_or(""));
    facts.has_arg_parser |= first_segments().any(|s| ARG_PARSER_MODULES.contains(&s));
    facts.has_web_framework = first_segments().any(|s| WEB_FRAMEWORK_MODULES.contains(&s));
    Ok(facts)
}

/// Resolves `from <dots><rel> import ...` against the importing file's package.
fn resolve_relative(package: &str, level: usize, rel: &str) -> Option<String> {
    if level == 0 {
        return (!rel.is_empty()).then(|| rel.to_string());
    }
    let mut parts: Vec<&str> = if package.is_empty() {
        Vec::new()
    } else {
        package.split('.').collect()
    };
    // one dot is the current package, each further dot climbs one level
    for _ in 1..level {
        parts.pop()?;
    }
    if !rel.is_empty() {
        parts.extend(rel.split('.'));
    }
    if parts.is_empty() {
        None
    } else {
        Some(parts.join("."))
    }
}

fn split_list(s: &str) -> impl Iterator<Item = &str> {
    s.trim()
        .trim_start_matches('(')
        .trim_end_matches('\\')
        .trim_end_matches(')')
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
}

fn is_dotted_name(s: &str) -> bool {
    !s.is_empty()
        && s.split('.').all(|seg| {
            let mut chars = seg.chars();
            matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
                && chars.all(|c| c.is_alphanumeric() || c == '_')
        })
}

fn parse_bases(rest: &str) -> Vec<String> {
    let inner = match rest.find(')') {
        Some(i) => &rest[..i],
        None => rest,
    };
    let mut bases = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for ch in inner.chars() {
        match ch {
            '[' | '(' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                push_base(&mut bases, &current);
                current.clear();
            }
            _ if depth == 0 => current.push(ch),
            _ => {}
        }
    }
    push_base(&mut bases, &current);
    bases
}

fn push_base(bases: &mut Vec<String>, raw: &str) {
    let t = raw.trim();
    if !t.contains('=') && is_dotted_name(t) {
        bases.push(t.to_string());
    }
}

/// Tracks triple-quoted strings across physical lines and strips comments
/// and string literals from the code it hands back.
#[derive(Default)]
struct LineLexer {
    open_triple: Option<char>,
}

impl LineLexer {
    /// Code portion of `line`, or `None` when the line starts inside a
    /// triple-quoted string.
    fn code_of(&mut self, line: &str) -> Option<String> {
        let starts_in_string = self.open_triple.is_some();
        let chars: Vec<char> = line.chars().collect();
        let mut out = String::with_capacity(line.len());
        let mut i = 0;
        let mut short_quote: Option<char> = None;
        while i < chars.len() {
            let c = chars[i];
            if let Some(q) = self.open_triple {
                if c == '\\' {
                    i += 2;
                    continue;
                }
                if is_triple(&chars, i, q) {
                    self.open_triple = None;
                    i += 3;
                } else {
                    i += 1;
                }
                continue;
            }
            if let Some(q) = short_quote {
                if c == '\\' {
                    i += 2;
                    continue;
                }
                if c == q {
                    short_quote = None;
                    out.push(q);
                }
                i += 1;
                continue;
            }
            match c {
                '#' => break,
                '"' | '\'' if is_triple(&chars, i, c) => {
                    self.open_triple = Some(c);
                    i += 3;
                }
                '"' | '\'' => {
                    short_quote = Some(c);
                    out.push(c);
                    i += 1;
                }
                _ => {
                    out.push(c);
                    i += 1;
                }
            }
        }
        if starts_in_string {
            None
        } else {
            Some(out)
        }
    }
}

fn is_triple(chars: &[char], i: usize, q: char) -> bool {
    i + 2 < chars.len() && chars[i] == q && chars[i + 1] == q && chars[i + 2] == q
}
