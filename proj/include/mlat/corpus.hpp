#pragma once

#include <string>
#include <vector>

#include "mlat/core.hpp"
#include "mlat/isoclinism.hpp"

// The shipped example corpus: multiplication-table builders for small groups,
// a writer for the default corpus files, and a loader with per-file errors.

namespace mlat {

// (i + j) mod n
std::vector<std::vector<ElementId>> cyclic_table(int n);
// bitwise xor on {0,1,2,3}
std::vector<std::vector<ElementId>> klein_table();
// r^k s^j with id k + 4j and s r = r^-1 s
std::vector<std::vector<ElementId>> dihedral8_table();
// i^a j^b with id a + 4b, j i = i^-1 j and j^2 = i^2
std::vector<std::vector<ElementId>> quaternion8_table();
// permutations of {0,1,2} in lexicographic one-line order, x*y = x after y
std::vector<std::vector<ElementId>> symmetric3_table();
// a^k b^j with id k + 8j and b a = a^5 b
std::vector<std::vector<ElementId>> modular16_table();

struct CorpusAlgebra {
    std::string name;  // file stem
    FiniteMla algebra;
};

struct CorpusExtension {
    std::string name;  // file stem
    CentralExtension extension;
    std::string algebra_name;  // empty when the algebra was inline
    std::string cover_of;      // grouping tag for supplied covers, often empty
};

struct Corpus {
    std::vector<CorpusAlgebra> algebras;      // sorted by name
    std::vector<CorpusExtension> extensions;  // sorted by name

    const FiniteMla* find_algebra(const std::string& name) const;
};

// Writes the default corpus (.mla and .ext files) into dir, creating it when
// needed. Returns the number of files written.
int write_default_corpus(const std::string& dir);

// Loads and validates one algebra file. The parse or group-law failure names
// the file; an invalid star is returned with its state recorded, not thrown.
FiniteMla load_algebra_file(const std::string& path);

// Loads one extension file. The "algebra" key may be an inline object or a
// name resolved as <name>.mla next to the file, then under corpus_dir.
CorpusExtension load_extension_file(const std::string& path,
                                    const std::string& corpus_dir = "");

// Loads every *.mla and *.ext directly under dir. Any invalid entry raises
// ParseError naming the offending file.
Corpus load_corpus(const std::string& dir);

}  // namespace mlat
