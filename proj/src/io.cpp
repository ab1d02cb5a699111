#include "srs/io.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace srs {

json OutputMeta::to_json() const
{
    json j = {{"version", version}, {"config_hash", config_hash}, {"tol_quad", tol_quad}};
    for (const auto& [k, v] : extra) j[k] = v;
    return j;
}

std::uint64_t fnv1a64(const std::string& s)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(std::uint64_t v)
{
    char buf[17];
    auto r = std::to_chars(buf, buf + 16, v, 16);
    std::string s(buf, r.ptr);
    return std::string(16 - s.size(), '0') + s;
}

std::string fmt17(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, r.ptr);
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const OutputMeta& meta,
                     const std::vector<std::string>& columns)
    : os_(path), ncol_(columns.size())
{
    if (!os_) throw std::runtime_error("cannot open " + path.string());
    os_ << "# version: " << meta.version << '\n';
    os_ << "# config_hash: " << meta.config_hash << '\n';
    os_ << "# tol_quad: " << fmt17(meta.tol_quad) << '\n';
    for (const auto& [k, v] : meta.extra) os_ << "# " << k << ": " << v << '\n';
    for (std::size_t i = 0; i < columns.size(); ++i) os_ << (i ? "," : "") << columns[i];
    os_ << '\n';
}

void CsvWriter::sep()
{
    if (col_ >= ncol_) throw std::logic_error("csv row has too many fields");
    if (col_++) os_ << ',';
}

CsvWriter& CsvWriter::num(double v)
{
    sep();
    os_ << fmt17(v);
    return *this;
}

CsvWriter& CsvWriter::str(const std::string& s)
{
    sep();
    os_ << s;
    return *this;
}

void CsvWriter::end_row()
{
    if (col_ != ncol_) throw std::logic_error("csv row is short");
    os_ << '\n';
    col_ = 0;
    ++rows_;
}

void write_json(const std::filesystem::path& path, const json& j)
{
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path.string());
    os << j.dump(2) << '\n';
}

namespace {

json cjson(cplx z) { return json::array({z.real(), z.imag()}); }

}  // namespace

json frame_to_json(const EllipticFrame& f)
{
    return {
        {"xi", f.gp.xi},
        {"lambda_minus", f.gp.lambda_minus},
        {"lambda_plus", f.gp.lambda_plus},
        {"d", cjson(f.gp.d)},
        {"r", f.gp.r},
        {"cos_phi", f.gp.cos_phi},
        {"tau", cjson(f.tau)},
        {"period_a", cjson(f.period_a)},
        {"period_E_to_d", cjson(f.period_EtoD)},
        {"B_g", f.B_g},
        {"B_zeta", f.B_zeta},
        {"Delta", f.Delta},
        {"zeta_inf", cjson(f.zeta_inf)},
        {"e1", f.e1},
        {"e0", f.e0},
        {"e0_normalization", "vanishing period over conj(d) -> d"},
        {"E0", f.E0},
        {"g_hat_inf", f.g_hat_inf},
        {"g_hat_0", f.g_hat_0},
        {"phi_hat", f.phi_hat},
        {"U_E0", cjson(f.U_E0)},
        {"U_zero", cjson(f.U_zero)},
        {"U_inf", cjson(f.U_inf)},
        {"imag_parts",
         {{"B_g", f.im_B_g},
          {"B_zeta", f.im_B_zeta},
          {"Delta", f.im_Delta},
          {"phi_hat", f.im_phi_hat},
          {"g_hat_inf", f.im_g_hat_inf},
          {"g_hat_0", f.im_g_hat_0}}},
    };
}

json certificate_to_json(const PositivityCertificate& c, bool with_boxes)
{
    json boxes = json::array();
    if (with_boxes)
        for (const auto& b : c.boxes) boxes.push_back({b.x_lo, b.x_hi, b.a_lo, b.a_hi, b.lower_bound});
    json j = {
        {"beta", c.beta},
        {"eps", c.eps},
        {"x_max", c.x_max},
        {"alpha_max", c.alpha_max},
        {"box_count", c.boxes.size()},
        {"boxes", boxes},
        {"status", status_name(c.status)},
        {"min_alpha_found", c.min_alpha_found},
        {"argmin", {c.argmin_x, c.argmin_alpha}},
        {"grid_step", c.grid_step},
    };
    if (c.status == CertStatus::Counterexample)
        j["counterexample"] = {{"x", c.counter_x}, {"alpha", c.counter_alpha}, {"value", c.counter_value}};
    return j;
}

void write_field_snapshot(const std::filesystem::path& path, const FieldGrid& g, const OutputMeta& meta)
{
    OutputMeta m = meta;
    m.extra.emplace_back("t", fmt17(g.t));
    m.extra.emplace_back("scheme", g.scheme);
    CsvWriter w(path, m, {"x", "re_q", "im_q", "re_mu", "im_mu", "nu"});
    for (std::size_t j = 0; j < g.x.size(); ++j) {
        w.num(g.x[j]).num(g.q[j].real()).num(g.q[j].imag()).num(g.mu[j].real()).num(g.mu[j].imag()).num(g.nu[j]);
        w.end_row();
    }
}

}  // namespace srs
