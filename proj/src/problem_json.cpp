#include "mldsc/problem_json.hpp"

#include <json.hpp>

namespace mldsc {

namespace {

using nlohmann::json;

json matrix_to_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

json vector_to_json(const Eigen::VectorXd& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

Eigen::MatrixXd matrix_from_json(const json& j, const std::string& name) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw std::runtime_error("problem json: " + name + " must be a nested array");
    const auto rows = j.size();
    const auto cols = j[0].size();
    Eigen::MatrixXd m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (j[r].size() != cols)
            throw std::runtime_error("problem json: ragged rows in " + name);
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = j[r][c].get<double>();
    }
    return m;
}

Eigen::VectorXd vector_from_json(const json& j, const std::string& name) {
    if (!j.is_array())
        throw std::runtime_error("problem json: " + name + " must be an array");
    Eigen::VectorXd v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) v(i) = j[i].get<double>();
    return v;
}

}  // namespace

std::string problem_to_json(const LqgProblem& p, int indent) {
    json j;
    j["partition"]["d_x"] = p.partition.d_x();
    j["partition"]["d_z"] = p.partition.d_z();
    j["A"] = matrix_to_json(p.A);
    j["B"] = json::array();
    for (const auto& b : p.B) j["B"].push_back(matrix_to_json(b));
    j["sigma"] = matrix_to_json(p.sigma);
    j["Q"] = matrix_to_json(p.Q);
    j["R"] = json::array();
    for (const auto& r : p.R) j["R"].push_back(matrix_to_json(r));
    j["P"] = matrix_to_json(p.P);
    j["mu0"] = vector_to_json(p.mu0);
    j["Sigma0"] = matrix_to_json(p.Sigma0);
    j["T"] = p.T;
    return j.dump(indent);
}

LqgProblem problem_from_json(const std::string& text) {
    const json j = json::parse(text);

    LqgProblem p;
    p.partition = BlockPartition(j.at("partition").at("d_x").get<int>(),
                                 j.at("partition").at("d_z").get<std::vector<int>>());
    p.A = matrix_from_json(j.at("A"), "A");
    for (const auto& b : j.at("B")) p.B.push_back(matrix_from_json(b, "B"));
    p.sigma = matrix_from_json(j.at("sigma"), "sigma");
    p.Q = matrix_from_json(j.at("Q"), "Q");
    for (const auto& r : j.at("R")) p.R.push_back(matrix_from_json(r, "R"));
    p.P = matrix_from_json(j.at("P"), "P");
    p.mu0 = vector_from_json(j.at("mu0"), "mu0");
    p.Sigma0 = matrix_from_json(j.at("Sigma0"), "Sigma0");
    p.T = j.at("T").get<double>();
    return p;
}

}  // namespace mldsc
