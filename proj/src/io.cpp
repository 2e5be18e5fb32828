#include "perfmix/io.hpp"

#include "perfmix/error.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace perfmix {

namespace {

// file -> meaningful lines, comments and blanks removed
std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "ParseError", "cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (std::size_t h = line.find('#'); h != std::string::npos)
            line.erase(h);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        lines.push_back(line.substr(a, b - a + 1));
    }
    return lines;
}

std::vector<long> ints_of(const std::string& s, const std::string& path) {
    std::istringstream iss(s);
    std::vector<long> out;
    long v;
    while (iss >> v) out.push_back(v);
    iss.clear();
    std::string rest;
    iss >> rest;
    require(rest.empty(), "ParseError", path + ": unexpected token '" + rest + "'");
    return out;
}

Symbol symbol_of(long v, int q, const std::string& path) {
    require(v >= 0 && v < q, "ParseError",
            path + ": symbol out of range for order " + std::to_string(q));
    return Symbol(v);
}

} // namespace

Code read_code_file(const std::string& path) {
    std::vector<std::string> lines = read_lines(path);
    require(!lines.empty() && lines[0].rfind("space ", 0) == 0, "ParseError",
            path + ": first line must be `space q1 q2 ... qn`");
    std::vector<long> hdr = ints_of(lines[0].substr(6), path);
    require(!hdr.empty(), "ParseError", path + ": empty space header");
    std::vector<int> orders;
    for (long q : hdr) {
        require(q >= 2 && q <= 16, "ParseError",
                path + ": coordinate order outside [2, 16]");
        orders.push_back(int(q));
    }
    MixedSpace sp(orders);
    std::vector<Word> words;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::vector<long> vals = ints_of(lines[i], path);
        require(vals.size() == sp.n(), "ParseError",
                path + ": codeword length != space length");
        Word w(sp.n());
        for (std::size_t j = 0; j < vals.size(); ++j)
            w[j] = symbol_of(vals[j], sp.order(j), path);
        words.push_back(std::move(w));
    }
    return Code(sp, std::move(words), Code::ZeroWord::optional);
}

std::string format_code(const Code& c) {
    std::ostringstream out;
    out << "space";
    for (int q : c.space().orders()) out << ' ' << q;
    out << '\n';
    for (const Word& w : c.words()) {
        for (std::size_t j = 0; j < w.size(); ++j)
            out << (j ? " " : "") << int(w[j]);
        out << '\n';
    }
    return out.str();
}

void write_code_file(const std::string& path, const Code& c) {
    write_file_atomic(path, format_code(c));
}

namespace {

Quasigroup parse_quasigroup_block(const std::vector<std::string>& lines,
                                  std::size_t& pos, const std::string& path) {
    require(pos < lines.size() && lines[pos].rfind("qgroup ", 0) == 0,
            "ParseError", path + ": expected `qgroup ARITY ORDER`");
    std::vector<long> hdr = ints_of(lines[pos].substr(7), path);
    require(hdr.size() == 2, "ParseError", path + ": qgroup header needs 2 fields");
    const long arity = hdr[0], order = hdr[1];
    require(arity >= 1 && order >= 1 && order <= 16, "ParseError",
            path + ": unsupported qgroup shape");
    ++pos;

    std::uint64_t cells = 1;
    for (long i = 0; i < arity; ++i) {
        cells *= std::uint64_t(order);
        require(cells <= (std::uint64_t(1) << 20), "ParseError",
                path + ": qgroup table too large");
    }
    Quasigroup g;
    g.order = int(order);
    g.arity = int(arity);
    g.table.resize(cells);
    std::vector<long> expect(arity, 1); // lex argument order, 1-based
    for (std::uint64_t c = 0; c < cells; ++c, ++pos) {
        require(pos < lines.size(), "ParseError", path + ": truncated qgroup table");
        std::string line = lines[pos];
        std::size_t arrow = line.find("->");
        require(arrow != std::string::npos, "ParseError",
                path + ": qgroup line missing `->`");
        std::vector<long> args = ints_of(line.substr(0, arrow), path);
        std::vector<long> val = ints_of(line.substr(arrow + 2), path);
        require(args.size() == std::size_t(arity) && val.size() == 1, "ParseError",
                path + ": malformed qgroup line");
        require(args == expect, "ParseError",
                path + ": qgroup lines out of lexicographic order");
        require(val[0] >= 1 && val[0] <= order, "ParseError",
                path + ": qgroup value out of range");
        g.table[c] = Symbol(val[0]);
        for (long i = arity - 1; i >= 0; --i) {
            if (expect[i] < order) {
                ++expect[i];
                break;
            }
            expect[i] = 1;
        }
    }
    return g;
}

} // namespace

Quasigroup read_quasigroup_file(const std::string& path) {
    std::vector<std::string> lines = read_lines(path);
    std::size_t pos = 0;
    Quasigroup g = parse_quasigroup_block(lines, pos, path);
    require(pos == lines.size(), "ParseError",
            path + ": trailing content after qgroup table");
    return g;
}

std::vector<Quasigroup> read_quasigroup_blocks(const std::string& path) {
    std::vector<std::string> lines = read_lines(path);
    std::vector<Quasigroup> out;
    std::size_t pos = 0;
    while (pos < lines.size()) out.push_back(parse_quasigroup_block(lines, pos, path));
    require(!out.empty(), "ParseError", path + ": no qgroup blocks");
    return out;
}

std::string format_quasigroup(const Quasigroup& g) {
    std::ostringstream out;
    out << "qgroup " << g.arity << ' ' << g.order << '\n';
    std::vector<int> args(g.arity, 1);
    for (std::uint64_t c = 0; c < g.cells(); ++c) {
        for (int i = 0; i < g.arity; ++i) out << args[i] << ' ';
        out << "-> " << int(g.table[c]) << '\n';
        for (int i = g.arity - 1; i >= 0; --i) {
            if (args[i] < g.order) {
                ++args[i];
                break;
            }
            args[i] = 1;
        }
    }
    return out.str();
}

void write_quasigroup_file(const std::string& path, const Quasigroup& g) {
    write_file_atomic(path, format_quasigroup(g));
}

PartitionFile read_partition_file(const std::string& path) {
    std::vector<std::string> lines = read_lines(path);
    require(!lines.empty() && lines[0].rfind("partition ", 0) == 0, "ParseError",
            path + ": first line must be `partition q n t`");
    std::vector<long> hdr = ints_of(lines[0].substr(10), path);
    require(hdr.size() == 3, "ParseError", path + ": partition header needs 3 fields");
    PartitionFile pf;
    pf.q = int(hdr[0]);
    pf.n = std::size_t(hdr[1]);
    require(pf.q >= 2 && pf.q <= 16 && pf.n >= 1 && pf.n <= 16 && hdr[2] >= 1,
            "ParseError", path + ": unsupported partition shape");
    pf.classes.resize(std::size_t(hdr[2]));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        std::size_t colon = line.find(':');
        require(colon != std::string::npos, "ParseError",
                path + ": word line missing `CLASSID:`");
        std::vector<long> id = ints_of(line.substr(0, colon), path);
        require(id.size() == 1 && id[0] >= 0 && id[0] < hdr[2], "ParseError",
                path + ": class id out of range");
        std::vector<long> vals = ints_of(line.substr(colon + 1), path);
        require(vals.size() == pf.n, "ParseError",
                path + ": word length != declared n");
        Word w(pf.n);
        for (std::size_t j = 0; j < pf.n; ++j)
            w[j] = symbol_of(vals[j], pf.q, path);
        pf.classes[std::size_t(id[0])].push_back(std::move(w));
    }
    return pf;
}

Partition partition_from_file(const PartitionFile& pf) {
    int m = 0;
    std::uint64_t pw = 1;
    while (pw < pf.classes.size()) {
        pw *= std::uint64_t(pf.q);
        ++m;
    }
    require(pw == pf.classes.size(), "ParseError",
            "class count is not a power of q");
    MixedSpace sp = MixedSpace::uniform(pf.q, int(pf.n));
    std::vector<Code> classes;
    classes.reserve(pf.classes.size());
    std::vector<Word> all;
    for (const std::vector<Word>& ws : pf.classes) {
        require(!ws.empty(), "ParseError", "empty partition class");
        all.insert(all.end(), ws.begin(), ws.end());
        classes.emplace_back(sp, ws, Code::ZeroWord::optional);
    }
    Code target(sp, std::move(all), Code::ZeroWord::optional);
    return Partition{std::move(target), std::move(classes), pf.q, m};
}

std::vector<Code> classes_from_file(const PartitionFile& pf) {
    MixedSpace sp = MixedSpace::uniform(pf.q, int(pf.n));
    std::vector<Code> out;
    out.reserve(pf.classes.size());
    for (const std::vector<Word>& ws : pf.classes) {
        require(!ws.empty(), "ParseError", "empty partition class");
        out.emplace_back(sp, ws, Code::ZeroWord::optional);
    }
    return out;
}

std::string format_partition(const Partition& p) {
    std::vector<Code> cl = p.classes;
    return format_classes(p.q, p.target.space().n(), cl);
}

std::string format_classes(int q, std::size_t n, const std::vector<Code>& classes) {
    std::ostringstream out;
    out << "partition " << q << ' ' << n << ' ' << classes.size() << '\n';
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (const Word& w : classes[i].words()) {
            out << i << ':';
            for (Symbol s : w) out << ' ' << int(s);
            out << '\n';
        }
    return out.str();
}

void write_partition_file(const std::string& path, const Partition& p) {
    write_file_atomic(path, format_partition(p));
}

std::vector<std::size_t> read_perm_file(const std::string& path) {
    std::vector<std::string> lines = read_lines(path);
    std::vector<std::size_t> perm;
    for (const std::string& line : lines)
        for (long v : ints_of(line, path)) {
            require(v >= 0, "ParseError", path + ": negative index");
            perm.push_back(std::size_t(v));
        }
    std::vector<char> seen(perm.size(), 0);
    for (std::size_t v : perm) {
        require(v < perm.size() && !seen[v], "ParseError",
                path + ": not a permutation of 0..n-1");
        seen[v] = 1;
    }
    return perm;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        require(out.good(), "IoError", "cannot open " + tmp);
        out << content;
        out.flush();
        require(out.good(), "IoError", "short write to " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        fail("IoError", "cannot move " + tmp + " into place: " + ec.message());
    }
}

} // namespace perfmix
