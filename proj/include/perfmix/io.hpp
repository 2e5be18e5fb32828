#pragma once

#include "perfmix/mdsq.hpp"
#include "perfmix/partition.hpp"
#include "perfmix/space.hpp"

#include <string>
#include <vector>

namespace perfmix {

// Text formats. `#` starts a comment anywhere in a line; blank lines are
// skipped. Every writer emits exactly what the matching reader accepts, and
// re-reading an emitted file reproduces the in-memory object.
//
//   code       line 1 `space q1 q2 ... qn`, then one codeword per line as
//              base-10 symbol indices separated by single spaces
//   qgroup     line 1 `qgroup ARITY ORDER`, then k^arity lines
//              `j2 j3 ... jn -> j1` in lexicographic argument order,
//              symbols 1-based; several blocks may follow back to back
//   partition  line 1 `partition q n t`, then `CLASSID: w1 w2 ... wn`
//              per word, class ids 0-based

Code read_code_file(const std::string& path);
std::string format_code(const Code& c);
void write_code_file(const std::string& path, const Code& c);

Quasigroup read_quasigroup_file(const std::string& path);
std::vector<Quasigroup> read_quasigroup_blocks(const std::string& path);
std::string format_quasigroup(const Quasigroup& g);
void write_quasigroup_file(const std::string& path, const Quasigroup& g);

// Parsed partition file before any structural interpretation.
struct PartitionFile {
    int q = 0;
    std::size_t n = 0;
    std::vector<std::vector<Word>> classes;
};
PartitionFile read_partition_file(const std::string& path);

// Interprets the classes as a Partition: target = union of all words,
// class count must be an exact power q^m.
Partition partition_from_file(const PartitionFile& pf);
// Interprets the classes as bare codes over F_q^n (no zero-word demand).
std::vector<Code> classes_from_file(const PartitionFile& pf);

std::string format_partition(const Partition& p);
std::string format_classes(int q, std::size_t n, const std::vector<Code>& classes);
void write_partition_file(const std::string& path, const Partition& p);

// Whitespace-separated 0-based indices, `#` comments allowed.
std::vector<std::size_t> read_perm_file(const std::string& path);

// Writes via a temporary in the same directory plus rename, so the final
// path never holds a partial file.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace perfmix
