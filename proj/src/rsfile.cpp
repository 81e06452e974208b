#include "derivus/rsfile.hpp"

#include <fstream>
#include <sstream>

namespace derivus {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

static std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

RecursiveSystem parse_system(const std::string& text) {
    RecursiveSystem sys;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        if (line.rfind("constants:", 0) == 0) {
            for (const std::string& t : tokenize(line.substr(10)))
                sys.table.add_constant(t);
            continue;
        }
        if (line.rfind("predicates:", 0) == 0) {
            for (const std::string& t : tokenize(line.substr(11)))
                sys.table.add_predicate(t);
            continue;
        }
        sys.basis.push_back(parse_formula(line, sys.table));
    }
    validate_system(sys);
    return sys;
}

RecursiveSystem load_system_file(const std::string& path) {
    return parse_system(read_file(path));
}

} // namespace derivus
