#pragma once

// Resolution of machine references used on the command line.
//
//   path.cn              the only machine in the file
//   path.cn:name         a named machine in the file
//   zoo:P  zoo:coarse_b  zoo:coarse_c  zoo:universal
//   zoo:fig1[.main|.factor1|.factor2|.product]
//   zoo:Lk<k>[.dcn|.ncn]  zoo:Hk<k>  zoo:PkConj<k>
//   oracle:P  oracle:fig1  oracle:Lk<k>  oracle:Hk<k>  oracle:PkConj<k>   (languages only)

#include "cnet/compare.hpp"
#include "cnet/constructions.hpp"
#include "cnet/io.hpp"
#include "cnet/zoo.hpp"

#include <fstream>

namespace cnet {

inline std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline std::vector<CounterNet> load_machine_file(const std::string& path)
{
    try {
        return parse_machine_file(read_text_file(path));
    } catch (const ParseError& e) {
        throw Error(path + ": " + e.what());
    }
}

namespace detail {

/// Splits "Lk3.ncn" into ("Lk", 3, "ncn"). The number is optional.
struct ZooName {
    std::string base;
    std::optional<std::size_t> k;
    std::string part;
};

inline ZooName split_zoo_name(std::string_view s)
{
    ZooName z;
    auto dot = s.find('.');
    std::string_view head = s.substr(0, dot);
    if (dot != std::string_view::npos)
        z.part = std::string(s.substr(dot + 1));
    std::size_t digits = head.size();
    if (head == "fig1") {
        z.base = "fig1";
        return z;
    }
    while (digits > 0 && std::isdigit(static_cast<unsigned char>(head[digits - 1])))
        --digits;
    z.base = std::string(head.substr(0, digits));
    if (digits < head.size())
        z.k = std::stoul(std::string(head.substr(digits)));
    return z;
}

inline std::size_t need_k(const ZooName& z, std::string_view ref)
{
    if (!z.k || *z.k == 0)
        throw Error("zoo reference '" + std::string(ref) + "' needs a positive k, e.g. " + z.base + "3");
    return *z.k;
}

inline void no_part(const ZooName& z, std::string_view ref)
{
    if (!z.part.empty())
        throw Error("zoo reference '" + std::string(ref) + "' takes no '." + z.part + "' suffix");
}

} // namespace detail

inline const std::vector<std::string>& zoo_names()
{
    static const std::vector<std::string> names{"P",  "coarse_b", "coarse_c", "universal",
                                                "fig1", "Lk",     "Hk",       "PkConj"};
    return names;
}

inline CounterNet resolve_zoo(std::string_view name)
{
    auto z = detail::split_zoo_name(name);
    if (z.base == "P" || z.base == "coarse_b" || z.base == "coarse_c" || z.base == "universal") {
        detail::no_part(z, name);
        if (z.k)
            throw Error("zoo reference '" + std::string(name) + "' takes no k");
        if (z.base == "P")
            return zoo::build_P();
        if (z.base == "coarse_b")
            return zoo::build_coarse_b();
        if (z.base == "coarse_c")
            return zoo::build_coarse_c();
        return zoo::build_universal_lambda();
    }
    if (z.base == "fig1") {
        auto f = zoo::build_fig1();
        if (z.part.empty() || z.part == "main")
            return f.main;
        if (z.part == "factor1")
            return f.factor1;
        if (z.part == "factor2")
            return f.factor2;
        if (z.part == "product")
            return product(f.factor1, f.factor2);
        throw Error("unknown fig1 part '" + z.part + "' (main, factor1, factor2, product)");
    }
    if (z.base == "Lk") {
        auto k = detail::need_k(z, name);
        if (z.part.empty() || z.part == "dcn")
            return zoo::build_Lk_dcn(k);
        if (z.part == "ncn")
            return zoo::build_Lk_ncn(k);
        throw Error("unknown Lk part '" + z.part + "' (dcn, ncn)");
    }
    if (z.base == "Hk") {
        detail::no_part(z, name);
        return zoo::build_Hk(detail::need_k(z, name));
    }
    if (z.base == "PkConj") {
        detail::no_part(z, name);
        return zoo::build_Pk_conjecture(detail::need_k(z, name));
    }
    throw Error("unknown zoo machine '" + std::string(name) + "'");
}

inline CounterNet resolve_machine(std::string_view ref)
{
    if (ref.starts_with("zoo:"))
        return resolve_zoo(ref.substr(4));
    if (ref.starts_with("oracle:"))
        throw Error("'" + std::string(ref) + "' is an oracle, not a machine");
    std::string path(ref);
    std::string name;
    // A trailing ":name" selects a machine, unless the whole ref is an existing path.
    if (auto colon = path.rfind(':'); colon != std::string::npos && !std::ifstream(path)) {
        name = path.substr(colon + 1);
        path = path.substr(0, colon);
    }
    auto nets = load_machine_file(path);
    if (name.empty()) {
        if (nets.size() != 1)
            throw Error("'" + path + "' holds " + std::to_string(nets.size()) +
                        " machines; select one with '" + path + ":<name>'");
        return nets.front();
    }
    for (auto& n : nets)
        if (n.name == name)
            return n;
    throw Error("no machine named '" + name + "' in '" + path + "'");
}

inline Language resolve_language(std::string_view ref)
{
    if (!ref.starts_with("oracle:"))
        return Language::of(resolve_machine(ref));
    auto z = detail::split_zoo_name(ref.substr(7));
    detail::no_part(z, ref);
    if (z.base == "P" && !z.k)
        return oracles::P();
    if (z.base == "fig1" && !z.k)
        return oracles::fig1();
    if (z.base == "Lk")
        return oracles::Lk(detail::need_k(z, ref));
    if (z.base == "Hk")
        return oracles::Hk(detail::need_k(z, ref));
    if (z.base == "PkConj")
        return oracles::Pk_conjecture(detail::need_k(z, ref));
    throw Error("unknown oracle '" + std::string(ref) + "'");
}

} // namespace cnet
