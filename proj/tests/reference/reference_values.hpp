// Generated by gen_reference.py (mpmath, 50 digit working precision).
// Regenerate with: python3 gen_reference.py   (writes this file)
#pragma once
#include <complex>

namespace refval {
using C = std::complex<double>;

struct ErfcRef { C z; C value; };
inline const ErfcRef erfc_table[] = {
    {{0.0, 0.0}, {1.0, 0.0}},
    {{0.25, 0.0}, {0.7236736098317630670149, 0.0}},
    {{1.0, 0.0}, {0.1572992070502851306588, 0.0}},
    {{2.0, 0.0}, {0.004677734981047265837931, 0.0}},
    {{5.0, 0.0}, {1.537459794428034850188e-12, 0.0}},
    {{10.0, 0.0}, {2.088487583762544757001e-45, 0.0}},
    {{-1.0, 0.0}, {1.842700792949714869341, 0.0}},
    {{-3.0, 0.0}, {1.999977909503001414559, 0.0}},
    {{0.0, 0.5}, {1.0, -0.6149520946965109808397}},
    {{0.0, 2.0}, {1.0, -18.5648024145755525987}},
    {{0.0, -2.0}, {1.0, 18.5648024145755525987}},
    {{1.0, 1.0}, {-0.3161512816979476448803, -0.1904534692378346862841}},
    {{1.0, -1.0}, {-0.3161512816979476448803, 0.1904534692378346862841}},
    {{2.0, 3.0}, {21.8294614276145683891, -8.687318271470163144428}},
    {{-2.0, 3.0}, {-19.8294614276145683891, -8.687318271470163144428}},
    {{0.1, 0.1}, {0.8864143654381335506922, -0.1120811719910650423108}},
    {{3.9, 0.1}, {2.437135492374896587126e-8, -2.530428450182489132224e-8}},
    {{4.1, 0.1}, {4.500103692722161668155e-9, -5.052027479968143520107e-9}},
    {{0.5, 4.0}, {663332.8972404588232779, 748715.4769997102859035}},
    {{6.0, 0.25}, {-2.277254606581668243708e-17, -2.308593192213643974161e-18}},
    {{3.0, -4.0}, {121.1869913950794440981, -27.75033729362390249813}},
    {{11.9, 1.0}, {1.276874204419847794319e-63, 3.836172390785845258311e-63}},
    {{12.1, 1.0}, {2.158146039931122862646e-65, 2.460813137699101114051e-65}},
    {{0.0, 11.9}, {1.0, -1.506145329832799687608e+60}},
    {{8.0, 8.0}, {-0.04985175415703184758167, -0.001187002553565359286279}},
    {{-8.0, 8.0}, {2.049851754157031847582, -0.001187002553565359286279}},
    {{20.0, 20.0}, {-0.01892597849978877872764, -0.006300310979864400475244}},
    {{25.0, -25.0}, {0.01449751571983050462493, 0.006668563802139472163121}},
    {{30.0, 0.0}, {0.0, 0.0}},
    {{2.5, -2.5}, {0.1236368046495786747337, 0.09992877379159746796475}},
    {{0.7071067811865475244, -0.7071067811865475244}, {0.03073578805578406961983, 0.474147636640994245162}},
    {{1.414213562373095049, -1.414213562373095049}, {-0.01031171202548949132685, -0.2739257594635398989981}},
    {{5.656854249492380196, -5.656854249492380196}, {-0.02582316289608887606246, 0.06561434210660069277542}},
    {{14.14213562373095049, -14.14213562373095049}, {0.006460895472462306309356, -0.02745952163695792804228}},
    {{21.21320343559642573, -21.21320343559642573}, {-0.01238003766465389597141, 0.0141566865100770211299}},
    {{-14.14213562373095049, 14.14213562373095049}, {1.993539104527537693691, 0.02745952163695792804228}},
    {{1.0e-8, 1.0e-8}, {0.9999999887162083290449, -1.128379167095512498671e-8}},
    {{0.03, -0.04}, {0.9661046208944186445631, 0.04511858195808535143167}},
};

struct ProductRef { double xp, x1, x, t; C value; };
inline const ProductRef product_table[] = {
    {0, 1, 2, 0.1, {0.05937159659447659027036, 0.0210173754104343503748}},
    {0, 1, 2, 1, {0.09522673461891734314205, 0.1580756408489738224401}},
    {0, 1, 2, 5, {0.2150467922823186215303, -0.2184347247092650389141}},
    {-1, 0.5, 2.5, 0.1, {-0.02596813605443217303757, -0.0249889600405669322224}},
    {-1, 0.5, 2.5, 1, {0.05880157204579779030551, -0.09577875505950794818794}},
    {0, 0.3, 3, 5, {0.2418034281730289525329, -0.04391909285497560976226}},
    {1, 2.5, 4, 1, {-0.1156200375456510332725, -0.05913073304437513740153}},
    {0, 2, 2.5, 0.1, {0.02862167461475698134156, -0.04152168221463169397526}},
    {-2, 0, 1.5, 1, {0.05880157204579779030551, -0.09577875505950794818794}},
    {0.5, 1.2, 3.3, 5, {0.2437971695886497002955, -0.07952579645380738328031}},
};
inline const C product_example = {0.09522673461891734314205, 0.1580756408489738224401};

struct EdgeMomentRef { double b, s0; C m32; C m12; };
inline const EdgeMomentRef edge_moment_table[] = {
    {2, 0.001, {-0.01470666549226638172468, -0.005806368225816012888032}, {-0.00001470955947804034791327, -0.000005799011281110216035025}},
    {0.5, 0.02, {0.04296466294891899234949, 0.2792782932352571362156}, {0.00107619868467720704494, 0.005529934950501947122942}},
    {30, 0.01, {-0.0007311752321641000269483, -0.003252151956439401888591}, {-0.000007322590785982538890912, -0.0000325190732823873646294}},
    {0.04, 0.004, {0.7900396920475364838208, -1.35904696483909557911}, {0.002588671119856113313015, -0.005610656861214633440456}},
    {8, 0.0005, {-0.0003662624744460830855201, -0.002770983897763691640663}, {-1.832178286783269357051e-7, -0.000001385480489649739065151}},
};

struct MoshinskyRef { double xp, x1, x, t0, t; C value; };
inline const MoshinskyRef moshinsky_table[] = {
    {0, 8, 10, 0.04, 0.05, {0.876320899400528051336, 0.1668424308541633351643}},
    {0, 8, 9, 0.032, 0.05, {0.4794962087811605568607, -1.711071550423481702971}},
    {0, 8, 11, 0.045, 0.05, {-0.02171792951684464632482, 0.01264238322521991229023}},
    {-1, 0.5, 2, 0.3, 1, {-0.3687523527802804650457, -0.1225553477594790043894}},
};

struct ShutterRef { double xp, x1, x, t, tau; C value; };
inline const ShutterRef shutter_table[] = {
    {0, 8, 10, 0.05, 0.01, {1.364978069120645554444, 0.2597727215448747247651}},
    {0, 8, 10, 0.05, 1, {2.419502601982596141809e-11, 5.394718057539372393413e-12}},
    {0, 8, 10, 0.05, 0.0001, {1.748265926655518728858, 0.3328503263005755058858}},
    {0, 1, 2, 1, 0.3, {0.0910639847503704727786, 0.190772419881255562725}},
};
inline const double shutter_example_rho = 8.000000195312492847443;
inline const double shutter_example_theta = 0.0001562499949137372771899;

inline const double gaussian_peak_density = 1.106466806106075423425;
inline const double eta_half = 0.6048986434216303702473;
inline const C fresnel_line_62_5 = {0.1585330919042404405338, 0.1585330919042404405338};

} // namespace refval
