// Auto-generated by tests/data/gen_reference_values.py -- do not edit.
// Values computed with mpmath (adaptive 60..900 digit arithmetic) from
// the defining series / integral representations.
#pragma once

namespace refvals {

struct MlSample { double alpha, beta, z_re, z_im, v_re, v_im; };
inline const MlSample kMlSamples[] = {
    {1.25000000000000000, 1.00000000000000000, 0.500000000000000000, 0.0, 1.52461575383643295, 0.0},
    {1.25000000000000000, 1.00000000000000000, -0.191341716182544886, 0.461939766255643378, 0.784866082489661236, 0.352146090459700959},
    {1.25000000000000000, 1.00000000000000000, -0.294250558627672854, 0.404248201909795092, 0.723912131866568905, 0.287835185875410707},
    {1.25000000000000000, 1.00000000000000000, -0.500000000000000000, 6.40884228321227019e-62, 0.626878697267476222, 3.99282579091397118e-62},
    {1.25000000000000000, 1.00000000000000000, 3.00000000000000000, 0.0, 8.93372395936692598, 0.0},
    {1.25000000000000000, 1.00000000000000000, -1.14805029709526932, 2.77163859753386027, -0.579488142125526327, 0.475705874098230635},
    {1.25000000000000000, 1.00000000000000000, -1.76550335176603713, 2.42548921145877055, -0.357751022797637084, 0.287814597376739502},
    {1.25000000000000000, 1.00000000000000000, -3.00000000000000000, 3.84530536992736211e-61, -0.0599304888829967412, 2.77613570117966744e-62},
    {1.25000000000000000, 1.00000000000000000, 11.2500000000000000, 0.0, 820.478969557818886, 0.0},
    {1.25000000000000000, 1.00000000000000000, -4.30518861410725993, 10.3936447407519760, 0.633140683826977450, 0.465382054266525765},
    {1.25000000000000000, 1.00000000000000000, -6.62063756912263922, 9.09558454297038957, 0.179129268584528439, 0.0909843480257972153},
    {1.25000000000000000, 1.00000000000000000, -11.2500000000000000, 1.44198951372276079e-60, -0.0252978477955874661, -7.21008009053467215e-63},
    {1.25000000000000000, 1.00000000000000000, 14.6250000000000000, 0.0, 4142.42558627218577, 0.0},
    {1.25000000000000000, 1.00000000000000000, -5.59674519833943791, 13.5117381629775688, -0.517862598859508571, 0.598683439197928658},
    {1.25000000000000000, 1.00000000000000000, -8.60682883985943099, 11.8242599058615064, -0.0903204757564292127, 0.123610009904285801},
    {1.25000000000000000, 1.00000000000000000, -14.6250000000000000, 1.87458636783958903e-60, -0.0156504702476529826, -2.77948562850853920e-63},
    {1.25000000000000000, 1.00000000000000000, 200.000000000000000, 0.0, 1.01388346687575882e+30, 0.0},
    {1.25000000000000000, 1.00000000000000000, -76.5366864730179543, 184.775906502257351, 0.783758437006146946, 0.157551178769045267},
    {1.25000000000000000, 1.00000000000000000, -117.700223451069142, 161.699280763918037, -0.000596051404043312340, -0.000836322710917708047},
    {1.25000000000000000, 1.00000000000000000, -200.000000000000000, 2.56353691328490808e-59, -0.00103076402908782557, -1.33507835420271209e-64},
    {1.25000000000000000, 2.00000000000000000, 0.500000000000000000, 0.0, 1.21930579702716043, 0.0},
    {1.25000000000000000, 2.00000000000000000, -0.191341716182544886, 0.461939766255643378, 0.911206841874252149, 0.165485969743869031},
    {1.25000000000000000, 2.00000000000000000, -0.294250558627672854, 0.404248201909795092, 0.879405861334479754, 0.138663605846053897},
    {1.25000000000000000, 2.00000000000000000, -0.500000000000000000, 6.40884228321227019e-62, 0.823853949273194261, 2.01981331808102128e-62},
    {1.25000000000000000, 2.00000000000000000, 3.00000000000000000, 0.0, 3.44215777087735733, 0.0},
    {1.25000000000000000, 2.00000000000000000, -1.14805029709526932, 2.77163859753386027, 0.296931390438422497, 0.507023200103005718},
    {1.25000000000000000, 2.00000000000000000, -1.76550335176603713, 2.42548921145877055, 0.308134434847516437, 0.362520304352929869},
    {1.25000000000000000, 2.00000000000000000, -3.00000000000000000, 3.84530536992736211e-61, 0.342889620481659465, 4.13057687907903946e-62},
    {1.25000000000000000, 2.00000000000000000, 11.2500000000000000, 0.0, 118.271013960337452, 0.0},
    {1.25000000000000000, 2.00000000000000000, -4.30518861410725993, 10.3936447407519760, 0.0957307580723742972, -0.0234088235969661700},
    {1.25000000000000000, 2.00000000000000000, -6.62063756912263922, 9.09558454297038957, 0.0520593430126206015, 0.0313043011562820049},
    {1.25000000000000000, 2.00000000000000000, -11.2500000000000000, 1.44198951372276079e-60, 0.0749552655517697289, 1.02801022695074433e-62},
    {1.25000000000000000, 2.00000000000000000, 14.6250000000000000, 0.0, 484.314846059507694, 0.0},
    {1.25000000000000000, 2.00000000000000000, -5.59674519833943791, 13.5117381629775688, 0.0919562634298585352, 0.112565873616841889},
    {1.25000000000000000, 2.00000000000000000, -8.60682883985943099, 11.8242599058615064, 0.0498587126258355145, 0.0529476026696518525},
    {1.25000000000000000, 2.00000000000000000, -14.6250000000000000, 1.87458636783958903e-60, 0.0570631220804935258, 7.45615912123015492e-63},
    {1.25000000000000000, 2.00000000000000000, 200.000000000000000, 0.0, 1.46272958226253673e+28, 0.0},
    {1.25000000000000000, 2.00000000000000000, -76.5366864730179543, 184.775906502257351, 0.00384310757462198644, -0.00753818035520443684},
    {1.25000000000000000, 2.00000000000000000, -117.700223451069142, 161.699280763918037, 0.00239899445711242550, 0.00330557985078731361},
    {1.25000000000000000, 2.00000000000000000, -200.000000000000000, 2.56353691328490808e-59, 0.00408734229004070595, 5.24818179008109535e-64},
    {1.25000000000000000, 1.25000000000000000, 0.500000000000000000, 0.0, 1.54147571736240977, 0.0},
    {1.25000000000000000, 1.25000000000000000, -0.191341716182544886, 0.461939766255643378, 0.924154526543046467, 0.305865879513510819},
    {1.25000000000000000, 1.25000000000000000, -0.294250558627672854, 0.404248201909795092, 0.869216004230947594, 0.252113615904967283},
    {1.25000000000000000, 1.25000000000000000, -0.500000000000000000, 6.40884228321227019e-62, 0.778772829488454071, 3.55604831076894212e-62},
    {1.25000000000000000, 1.25000000000000000, 3.00000000000000000, 0.0, 7.12582517305264053, 0.0},
    {1.25000000000000000, 1.25000000000000000, -1.14805029709526932, 2.77163859753386027, -0.256685764151968057, 0.587785270229215154},
    {1.25000000000000000, 1.25000000000000000, -1.76550335176603713, 2.42548921145877055, -0.116587962548901425, 0.384361733398539847},
    {1.25000000000000000, 1.25000000000000000, -3.00000000000000000, 3.84530536992736211e-61, 0.0902443185296395815, 3.96679916932493337e-62},
    {1.25000000000000000, 1.25000000000000000, 11.2500000000000000, 0.0, 505.623833264484329, 0.0},
    {1.25000000000000000, 1.25000000000000000, -4.30518861410725993, 10.3936447407519760, 0.478828447161234982, 0.124541586988695899},
    {1.25000000000000000, 1.25000000000000000, -6.62063756912263922, 9.09558454297038957, 0.134906909711741815, 0.00964755708813105612},
    {1.25000000000000000, 1.25000000000000000, -11.2500000000000000, 1.44198951372276079e-60, -0.00625011487767387266, -3.31822843608167451e-63},
    {1.25000000000000000, 1.25000000000000000, 14.6250000000000000, 0.0, 2422.33435797827788, 0.0},
    {1.25000000000000000, 1.25000000000000000, -5.59674519833943791, 13.5117381629775688, -0.139561586089314062, 0.445542691877997544},
    {1.25000000000000000, 1.25000000000000000, -8.60682883985943099, 11.8242599058615064, -0.00908850877927059988, 0.0919680469244127483},
    {1.25000000000000000, 1.25000000000000000, -14.6250000000000000, 1.87458636783958903e-60, -0.00185339928596609723, -1.10894771469308412e-63},
    {1.25000000000000000, 1.25000000000000000, 200.000000000000000, 0.0, 3.51384048312596956e+29, 0.0},
    {1.25000000000000000, 1.25000000000000000, -76.5366864730179543, 184.775906502257351, 0.272101315227169860, -0.0532525330045441534},
    {1.25000000000000000, 1.25000000000000000, -117.700223451069142, 161.699280763918037, 2.14319447269412920e-6, -6.70829652631903805e-6},
    {1.25000000000000000, 1.25000000000000000, -200.000000000000000, 2.56353691328490808e-59, -6.50994309504571809e-6, -1.68639283266552954e-66},
    {1.25000000000000000, 2.25000000000000000, 0.500000000000000000, 0.0, 1.04923150767286590, 0.0},
    {1.25000000000000000, 2.25000000000000000, -0.191341716182544886, 0.461939766255643378, 0.815337502801180692, 0.127994697091415498},
    {1.25000000000000000, 2.25000000000000000, -0.294250558627672854, 0.404248201909795092, 0.790383463060367225, 0.107649440102033935},
    {1.25000000000000000, 2.25000000000000000, -0.500000000000000000, 6.40884228321227019e-62, 0.746242605465047556, 1.57945074504983508e-62},
    {1.25000000000000000, 2.25000000000000000, 3.00000000000000000, 0.0, 2.64457465312230866, 0.0},
    {1.25000000000000000, 2.25000000000000000, -1.14805029709526932, 2.77163859753386027, 0.347979621394433836, 0.425737336552635321},
    {1.25000000000000000, 2.25000000000000000, -1.76550335176603713, 2.42548921145877055, 0.343911686938958309, 0.309452535698550434},
    {1.25000000000000000, 2.25000000000000000, -3.00000000000000000, 3.84530536992736211e-61, 0.353310162960998914, 3.60323965588624592e-62},
    {1.25000000000000000, 2.25000000000000000, 11.2500000000000000, 0.0, 72.8425750718061232, 0.0},
    {1.25000000000000000, 2.25000000000000000, -4.30518861410725993, 10.3936447407519760, 0.0506975944038312949, 0.0142968721453788323},
    {1.25000000000000000, 2.25000000000000000, -6.62063756912263922, 9.09558454297038957, 0.0494794542882617690, 0.0542334794563764072},
    {1.25000000000000000, 2.25000000000000000, -11.2500000000000000, 1.44198951372276079e-60, 0.0911375864707188859, 1.23226243633166810e-62},
    {1.25000000000000000, 2.25000000000000000, 14.6250000000000000, 0.0, 283.174399061346036, 0.0},
    {1.25000000000000000, 2.25000000000000000, -5.59674519833943791, 13.5117381629775688, 0.0775365637687920569, 0.0802198943479172438},
    {1.25000000000000000, 2.25000000000000000, -8.60682883985943099, 11.8242599058615064, 0.0507072182312996691, 0.0553008926309279412},
    {1.25000000000000000, 2.25000000000000000, -14.6250000000000000, 1.87458636783958903e-60, 0.0694461859998395202, 9.09144336425710933e-63},
    {1.25000000000000000, 2.25000000000000000, 200.000000000000000, 0.0, 5.06941733437879412e+27, 0.0},
    {1.25000000000000000, 2.25000000000000000, -76.5366864730179543, 184.775906502257351, 0.00114155186467113586, 0.000697444641318834120},
    {1.25000000000000000, 2.25000000000000000, -117.700223451069142, 161.699280763918037, 0.00294087865134178599, 0.00404735243043005955},
    {1.25000000000000000, 2.25000000000000000, -200.000000000000000, 2.56353691328490808e-59, 0.00500515382014543913, 6.42212367907691605e-64},
    {1.50000000000000000, 1.00000000000000000, 0.500000000000000000, 0.0, 1.42027023570495052, 0.0},
    {1.50000000000000000, 1.00000000000000000, -0.353553390593273762, 0.353553390593273762, 0.735641892787573054, 0.225981966274431727},
    {1.50000000000000000, 1.00000000000000000, -0.294250558627672854, 0.404248201909795092, 0.768042554436569371, 0.265239312794330095},
    {1.50000000000000000, 1.00000000000000000, -0.500000000000000000, 6.40884228321227019e-62, 0.663236794872427957, 3.84044779025191376e-62},
    {1.50000000000000000, 1.00000000000000000, 3.00000000000000000, 0.0, 5.40461071590103022, 0.0},
    {1.50000000000000000, 1.00000000000000000, -2.12132034355964257, 2.12132034355964257, -0.331395493762526328, 0.450152613943638687},
    {1.50000000000000000, 1.00000000000000000, -1.76550335176603713, 2.42548921145877055, -0.388667914261947412, 0.607602019617917333},
    {1.50000000000000000, 1.00000000000000000, -3.00000000000000000, 3.84530536992736211e-61, -0.175565373799978243, 5.51100623318944230e-62},
    {1.50000000000000000, 1.00000000000000000, 12.5000000000000000, 0.0, 145.586182143073104, 0.0},
    {1.50000000000000000, 1.00000000000000000, -8.83883476483184406, 8.83883476483184406, 0.393773049051528493, -0.538389877793753056},
    {1.50000000000000000, 1.00000000000000000, -7.35626396569182136, 10.1062050477448773, 0.683933810495343045, -0.953957631347330366},
    {1.50000000000000000, 1.00000000000000000, -12.5000000000000000, 1.60221057080306755e-60, -0.0256636302547143367, -3.94225098424259475e-62},
    {1.50000000000000000, 1.00000000000000000, 16.2500000000000000, 0.0, 407.544774332429275, 0.0},
    {1.50000000000000000, 1.00000000000000000, -11.4904851942813973, 11.4904851942813973, 0.645659236380710067, 0.0765332512337121280},
    {1.50000000000000000, 1.00000000000000000, -9.56314315539936776, 13.1380665620683405, 1.28008684307535052, 0.112086064705423468},
    {1.50000000000000000, 1.00000000000000000, -16.2500000000000000, 2.08287374204398781e-60, 0.0235589876317372392, -7.99207854539924842e-63},
    {1.50000000000000000, 1.00000000000000000, 200.000000000000000, 0.0, 474866023992566.721, 0.0},
    {1.50000000000000000, 1.00000000000000000, -141.421356237309505, 141.421356237309505, -0.625397288419764310, 0.232604290221024064},
    {1.50000000000000000, 1.00000000000000000, -117.700223451069142, 161.699280763918037, -19.9630964950859941, 12.0530648583936562},
    {1.50000000000000000, 1.00000000000000000, -200.000000000000000, 2.56353691328490808e-59, -0.00141002424793697725, -1.80752949653372092e-64},
    {1.50000000000000000, 2.00000000000000000, 0.500000000000000000, 0.0, 1.16131409013553608, 0.0},
    {1.50000000000000000, 2.00000000000000000, -0.353553390593273762, 0.353553390593273762, 0.893910202580139300, 0.0962747867573094734},
    {1.50000000000000000, 2.00000000000000000, -0.294250558627672854, 0.404248201909795092, 0.908660833938415918, 0.111868477097232364},
    {1.50000000000000000, 2.00000000000000000, -0.500000000000000000, 6.40884228321227019e-62, 0.859544053398015807, 1.67746967858702644e-62},
    {1.50000000000000000, 2.00000000000000000, 3.00000000000000000, 0.0, 2.38981712210591781, 0.0},
    {1.50000000000000000, 2.00000000000000000, -2.12132034355964257, 2.12132034355964257, 0.413368695843930519, 0.328374573334031110},
    {1.50000000000000000, 2.00000000000000000, -1.76550335176603713, 2.42548921145877055, 0.429748681204674964, 0.409686563100030366},
    {1.50000000000000000, 2.00000000000000000, -3.00000000000000000, 3.84530536992736211e-61, 0.392729633672170536, 4.85615076430125350e-62},
    {1.50000000000000000, 2.00000000000000000, 12.5000000000000000, 0.0, 26.9813622390161456, 0.0},
    {1.50000000000000000, 2.00000000000000000, -8.83883476483184406, 8.83883476483184406, -0.0634264471184790635, -0.0457910645898430905},
    {1.50000000000000000, 2.00000000000000000, -7.35626396569182136, 10.1062050477448773, -0.130990701656582723, -0.110802234711580611},
    {1.50000000000000000, 2.00000000000000000, -12.5000000000000000, 1.60221057080306755e-60, 0.0306322747092563913, 4.81055434806393514e-63},
    {1.50000000000000000, 2.00000000000000000, 16.2500000000000000, 0.0, 63.4871565474052495, 0.0},
    {1.50000000000000000, 2.00000000000000000, -11.4904851942813973, 11.4904851942813973, 0.0387249537945393611, -0.0788631078783369117},
    {1.50000000000000000, 2.00000000000000000, -9.56314315539936776, 13.1380665620683405, 0.0614941967559417950, -0.170343521492005602},
    {1.50000000000000000, 2.00000000000000000, -16.2500000000000000, 2.08287374204398781e-60, 0.0265369677258820153, 2.54472063278926639e-64},
    {1.50000000000000000, 2.00000000000000000, 200.000000000000000, 0.0, 13885166774288.8125, 0.0},
    {1.50000000000000000, 2.00000000000000000, -141.421356237309505, 141.421356237309505, 0.00882534865614774065, 0.0202521729596385294},
    {1.50000000000000000, 2.00000000000000000, -117.700223451069142, 161.699280763918037, 0.291547456916309413, 0.619455202725747331},
    {1.50000000000000000, 2.00000000000000000, -200.000000000000000, 2.56353691328490808e-59, 0.00282081490151331324, 3.61530411126224786e-64},
    {1.50000000000000000, 1.50000000000000000, 0.500000000000000000, 0.0, 1.40094795937009245, 0.0},
    {1.50000000000000000, 1.50000000000000000, -0.353553390593273762, 0.353553390593273762, 0.952306189212568894, 0.156019793950491832},
    {1.50000000000000000, 1.50000000000000000, -0.294250558627672854, 0.404248201909795092, 0.975611151337274037, 0.182014669691629273},
    {1.50000000000000000, 1.50000000000000000, -0.500000000000000000, 6.40884228321227019e-62, 0.898863075546068762, 2.69183322766745013e-62},
    {1.50000000000000000, 1.50000000000000000, 3.00000000000000000, 0.0, 3.67714026967368402, 0.0},
    {1.50000000000000000, 1.50000000000000000, -2.12132034355964257, 2.12132034355964257, 0.187758063251222993, 0.442356575377599053},
    {1.50000000000000000, 1.50000000000000000, -1.76550335176603713, 2.42548921145877055, 0.187017167833494592, 0.566229674166447666},
    {1.50000000000000000, 1.50000000000000000, -3.00000000000000000, 3.84530536992736211e-61, 0.214976667768269285, 6.16520075574121822e-62},
    {1.50000000000000000, 1.50000000000000000, 12.5000000000000000, 0.0, 62.7196436347189330, 0.0},
    {1.50000000000000000, 1.50000000000000000, -8.83883476483184406, 8.83883476483184406, -0.0318847206613027349, -0.290613013586551773},
    {1.50000000000000000, 1.50000000000000000, -7.35626396569182136, 10.1062050477448773, -0.0428146218399466832, -0.504948641804929294},
    {1.50000000000000000, 1.50000000000000000, -12.5000000000000000, 1.60221057080306755e-60, -0.0369076111724812903, -1.70680249462714331e-62},
    {1.50000000000000000, 1.50000000000000000, 16.2500000000000000, 0.0, 160.892497472557415, 0.0},
    {1.50000000000000000, 1.50000000000000000, -11.4904851942813973, 11.4904851942813973, 0.208564131504979766, -0.162407748996643138},
    {1.50000000000000000, 1.50000000000000000, -9.56314315539936776, 13.1380665620683405, 0.413121887067710842, -0.306691794910096561},
    {1.50000000000000000, 1.50000000000000000, -16.2500000000000000, 2.08287374204398781e-60, -0.00575556625258262911, -1.16078353798007003e-62},
    {1.50000000000000000, 1.50000000000000000, 200.000000000000000, 0.0, 81200947892128.8381, 0.0},
    {1.50000000000000000, 1.50000000000000000, -141.421356237309505, 141.421356237309505, -0.0472528223423051623, 0.103733366671941818},
    {1.50000000000000000, 1.50000000000000000, -117.700223451069142, 161.699280763918037, -1.15635648852687396, 3.81620813831821323},
    {1.50000000000000000, 1.50000000000000000, -200.000000000000000, 2.56353691328490808e-59, -0.0000105763807447045400, -2.72516240115706425e-66},
    {1.50000000000000000, 2.50000000000000000, 0.500000000000000000, 0.0, 0.840540471409901045, 0.0},
    {1.50000000000000000, 2.50000000000000000, -0.353553390593273762, 0.353553390593273762, 0.693445582100135619, 0.0542720589860541883},
    {1.50000000000000000, 2.50000000000000000, -0.294250558627672854, 0.404248201909795092, 0.701904492831140510, 0.0628862573154172899},
    {1.50000000000000000, 2.50000000000000000, -0.500000000000000000, 6.40884228321227019e-62, 0.673526410255144086, 9.52153493302856125e-63},
    {1.50000000000000000, 2.50000000000000000, 3.00000000000000000, 0.0, 1.46820357196701007, 0.0},
    {1.50000000000000000, 2.50000000000000000, -2.12132034355964257, 2.12132034355964257, 0.419914915989697009, 0.207710938730765727},
    {1.50000000000000000, 2.50000000000000000, -1.76550335176603713, 2.42548921145877055, 0.436158888951470975, 0.255052849129562214},
    {1.50000000000000000, 2.50000000000000000, -3.00000000000000000, 3.84530536992736211e-61, 0.391855124599992748, 3.18567330512987819e-62},
    {1.50000000000000000, 2.50000000000000000, 12.5000000000000000, 0.0, 11.5668945714458483, 0.0},
    {1.50000000000000000, 2.50000000000000000, -8.83883476483184406, 8.83883476483184406, 0.00383744435548394536, 0.0647493057171094500},
    {1.50000000000000000, 2.50000000000000000, -7.35626396569182136, 10.1062050477448773, -0.0468212806952352413, 0.0653554807556514695},
    {1.50000000000000000, 2.50000000000000000, -12.5000000000000000, 1.60221057080306755e-60, 0.0820530904203771469, 1.36711070944811304e-62},
    {1.50000000000000000, 2.50000000000000000, 16.2500000000000000, 0.0, 25.0181399589187246, 0.0},
    {1.50000000000000000, 2.50000000000000000, -11.4904851942813973, 11.4904851942813973, 0.0187491653993619050, 0.0120885892844558681},
    {1.50000000000000000, 2.50000000000000000, -9.56314315539936776, 13.1380665620683405, -0.00456678399050718176, -0.0179945833656307363},
    {1.50000000000000000, 2.50000000000000000, -16.2500000000000000, 2.08287374204398781e-60, 0.0600886776842007853, 8.19379738387480626e-63},
    {1.50000000000000000, 2.50000000000000000, 200.000000000000000, 0.0, 2374330119962.82860, 0.0},
    {1.50000000000000000, 2.50000000000000000, -141.421356237309505, 141.421356237309505, 0.00656902757856105909, 0.00492426686907736050},
    {1.50000000000000000, 2.50000000000000000, -117.700223451069142, 161.699280763918037, 0.110408326507526392, 0.0492767299684213480},
    {1.50000000000000000, 2.50000000000000000, -200.000000000000000, 2.56353691328490808e-59, 0.00500705012123968489, 6.42691655371547188e-64},
    {1.75000000000000000, 1.00000000000000000, 0.500000000000000000, 0.0, 1.33305745952519469, 0.0},
    {1.75000000000000000, 1.00000000000000000, -0.461939766255643378, 0.191341716182544886, 0.727727317410123329, 0.104381661739174250},
    {1.75000000000000000, 1.00000000000000000, -0.294250558627672854, 0.404248201909795092, 0.811076242024335481, 0.231106995071369051},
    {1.75000000000000000, 1.00000000000000000, -0.500000000000000000, 6.40884228321227019e-62, 0.709953217720584257, 3.45910350197103352e-62},
    {1.75000000000000000, 1.00000000000000000, 3.00000000000000000, 0.0, 3.80236322161329635, 0.0},
    {1.75000000000000000, 1.00000000000000000, -2.77163859753386027, 1.14805029709526932, -0.231635612963373176, 0.286587978046247171},
    {1.75000000000000000, 1.00000000000000000, -1.76550335176603713, 2.42548921145877055, -0.209698225038345582, 0.825521621798780130},
    {1.75000000000000000, 1.00000000000000000, -3.00000000000000000, 3.84530536992736211e-61, -0.222606257764378244, 8.93588624472562152e-62},
    {1.75000000000000000, 1.00000000000000000, 13.7500000000000000, 0.0, 50.0154040095341152, 0.0},
    {1.75000000000000000, 1.00000000000000000, -12.7033435720301929, 5.26189719501998436, -0.199140214636101143, -0.494799885401972240},
    {1.75000000000000000, 1.00000000000000000, -8.09189036226100349, 11.1168255525193650, -1.04075106560392357, -2.04137992830236287},
    {1.75000000000000000, 1.00000000000000000, -13.7500000000000000, 1.76243162788337430e-60, -0.157476796536849133, -1.38397822016135572e-61},
    {1.75000000000000000, 1.00000000000000000, 17.8750000000000000, 0.0, 103.061912760892632, 0.0},
    {1.75000000000000000, 1.00000000000000000, -16.5143466436392508, 6.84046635352597967, 0.254322834431185890, -0.449213322008655092},
    {1.75000000000000000, 1.00000000000000000, -10.5194574709393045, 14.4518732182751745, 0.624362953178928250, -2.76184547644612787},
    {1.75000000000000000, 1.00000000000000000, -17.8750000000000000, 2.29116111624838659e-60, 0.114831490319766099, -1.15715683752605772e-61},
    {1.75000000000000000, 1.00000000000000000, 200.000000000000000, 0.0, 529904789.683686964, 0.0},
    {1.75000000000000000, 1.00000000000000000, -184.775906502257351, 76.5366864730179543, -0.129731607769061310, 0.556348337333891755},
    {1.75000000000000000, 1.00000000000000000, -117.700223451069142, 161.699280763918037, 234.828318268900571, 237.434062465787757},
    {1.75000000000000000, 1.00000000000000000, -200.000000000000000, 2.56353691328490808e-59, 0.00229635360572238180, 1.73038895651235860e-62},
    {1.75000000000000000, 2.00000000000000000, 0.500000000000000000, 0.0, 1.11793170368527638, 0.0},
    {1.75000000000000000, 2.00000000000000000, -0.461939766255643378, 0.191341716182544886, 0.898895246815114344, 0.0399818609253249381},
    {1.75000000000000000, 2.00000000000000000, -0.294250558627672854, 0.404248201909795092, 0.932106117675082046, 0.0868866218684999133},
    {1.75000000000000000, 2.00000000000000000, -0.500000000000000000, 6.40884228321227019e-62, 0.891623812970885571, 1.33062650566454089e-62},
    {1.75000000000000000, 2.00000000000000000, 3.00000000000000000, 0.0, 1.87572148627944765, 0.0},
    {1.75000000000000000, 2.00000000000000000, -2.77163859753386027, 1.14805029709526932, 0.486038030627591802, 0.157670462685586522},
    {1.75000000000000000, 2.00000000000000000, -1.76550335176603713, 2.42548921145877055, 0.568571974350108789, 0.393099117414203991},
    {1.75000000000000000, 2.00000000000000000, -3.00000000000000000, 3.84530536992736211e-61, 0.472194019677223771, 5.08898902452040622e-62},
    {1.75000000000000000, 2.00000000000000000, 13.7500000000000000, 0.0, 11.1586302573140539, 0.0},
    {1.75000000000000000, 2.00000000000000000, -12.7033435720301929, 5.26189719501998436, -0.114685173460765111, 0.0204172912431055020},
    {1.75000000000000000, 2.00000000000000000, -8.09189036226100349, 11.1168255525193650, -0.486792245272351207, 0.0833866575352047785},
    {1.75000000000000000, 2.00000000000000000, -13.7500000000000000, 1.76243162788337430e-60, -0.0608273791908986446, 7.07898140039493623e-63},
    {1.75000000000000000, 2.00000000000000000, 17.8750000000000000, 0.0, 19.8198257883529696, 0.0},
    {1.75000000000000000, 2.00000000000000000, -16.5143466436392508, 6.84046635352597967, -0.0942427633223498119, -0.0511722323344928925},
    {1.75000000000000000, 2.00000000000000000, -10.5194574709393045, 14.4518732182751745, -0.458178488459356687, -0.273778532570731779},
    {1.75000000000000000, 2.00000000000000000, -17.8750000000000000, 2.29116111624838659e-60, -0.0543175168574504150, -1.23891349641225253e-62},
    {1.75000000000000000, 2.00000000000000000, 200.000000000000000, 0.0, 25663953.6205831300, 0.0},
    {1.75000000000000000, 2.00000000000000000, -184.775906502257351, 76.5366864730179543, 0.0282265187403123157, 0.00676434038633524162},
    {1.75000000000000000, 2.00000000000000000, -117.700223451069142, 161.699280763918037, 14.4480624796043453, -7.26915649634583700},
    {1.75000000000000000, 2.00000000000000000, -200.000000000000000, 2.56353691328490808e-59, 0.00185567698233726830, -3.22768797391282802e-65},
    {1.75000000000000000, 1.75000000000000000, 0.500000000000000000, 0.0, 1.24579201456901923, 0.0},
    {1.75000000000000000, 1.75000000000000000, -0.461939766255643378, 0.191341716182544886, 0.954021044517067594, 0.0527123096985648726},
    {1.75000000000000000, 1.75000000000000000, -0.294250558627672854, 0.404248201909795092, 0.997505722117616939, 0.114938026713502328},
    {1.75000000000000000, 1.75000000000000000, -0.500000000000000000, 6.40884228321227019e-62, 0.944543625969085219, 1.75296083336126872e-62},
    {1.75000000000000000, 1.75000000000000000, 3.00000000000000000, 0.0, 2.28750875220502579, 0.0},
    {1.75000000000000000, 1.75000000000000000, -2.77163859753386027, 1.14805029709526932, 0.420535593138772107, 0.196133615824876588},
    {1.75000000000000000, 1.75000000000000000, -1.76550335176603713, 2.42548921145877055, 0.511139818701798457, 0.500078862873952580},
    {1.75000000000000000, 1.75000000000000000, -3.00000000000000000, 3.84530536992736211e-61, 0.406672537649857337, 6.29798874968337268e-62},
    {1.75000000000000000, 1.75000000000000000, 13.7500000000000000, 0.0, 16.2561288958936983, 0.0},
    {1.75000000000000000, 1.75000000000000000, -12.7033435720301929, 5.26189719501998436, -0.206239964588116643, -0.0444844997733633242},
    {1.75000000000000000, 1.75000000000000000, -8.09189036226100349, 11.1168255525193650, -0.727183647994868048, -0.133850800131203184},
    {1.75000000000000000, 1.75000000000000000, -13.7500000000000000, 1.76243162788337430e-60, -0.137421608133024348, -1.20317815039204882e-62},
    {1.75000000000000000, 1.75000000000000000, 17.8750000000000000, 0.0, 29.9458432789190036, 0.0},
    {1.75000000000000000, 1.75000000000000000, -16.5143466436392508, 6.84046635352597967, -0.124459708413162708, -0.127518302324528954},
    {1.75000000000000000, 1.75000000000000000, -10.5194574709393045, 14.4518732182751745, -0.542003463871095919, -0.628400879951506800},
    {1.75000000000000000, 1.75000000000000000, -17.8750000000000000, 2.29116111624838659e-60, -0.0883842018489923826, -3.35351429876608492e-62},
    {1.75000000000000000, 1.75000000000000000, 200.000000000000000, 0.0, 54706903.3603854375, 0.0},
    {1.75000000000000000, 1.75000000000000000, -184.775906502257351, 76.5366864730179543, 0.0480002637025985924, 0.0342871011331654220},
    {1.75000000000000000, 1.75000000000000000, -117.700223451069142, 161.699280763918037, 34.0790993631290715, -5.21824074748546161},
    {1.75000000000000000, 1.75000000000000000, -200.000000000000000, 2.56353691328490808e-59, 0.00118125105131266724, 3.47999947030561824e-64},
    {1.75000000000000000, 2.75000000000000000, 0.500000000000000000, 0.0, 0.666114919050389375, 0.0},
    {1.75000000000000000, 2.75000000000000000, -0.461939766255643378, 0.191341716182544886, 0.582984582594096382, 0.0155163277248101014},
    {1.75000000000000000, 2.75000000000000000, -0.294250558627672854, 0.404248201909795092, 0.596062034115021459, 0.0334749082287620444},
    {1.75000000000000000, 2.75000000000000000, -0.500000000000000000, 6.40884228321227019e-62, 0.580093564558831486, 5.17249325585865037e-63},
    {1.75000000000000000, 2.75000000000000000, 3.00000000000000000, 0.0, 0.934121073871098783, 0.0},
    {1.75000000000000000, 2.75000000000000000, -2.77163859753386027, 1.14805029709526932, 0.415851801814054061, 0.0688512588703943847},
    {1.75000000000000000, 2.75000000000000000, -1.76550335176603713, 2.42548921145877055, 0.459780006492168179, 0.164072089301138891},
    {1.75000000000000000, 2.75000000000000000, -3.00000000000000000, 3.84530536992736211e-61, 0.407535419254792748, 2.24503170541163763e-62},
    {1.75000000000000000, 2.75000000000000000, 13.7500000000000000, 0.0, 3.56475665523884474, 0.0},
    {1.75000000000000000, 2.75000000000000000, -12.7033435720301929, 5.26189719501998436, 0.0668006823588367543, 0.0666201149116920740},
    {1.75000000000000000, 2.75000000000000000, -8.09189036226100349, 11.1168255525193650, -0.0326882944519277745, 0.207366855722207042},
    {1.75000000000000000, 2.75000000000000000, -13.7500000000000000, 1.76243162788337430e-60, 0.0841801306572253915, 2.08552397618752336e-62},
    {1.75000000000000000, 2.75000000000000000, 17.8750000000000000, 0.0, 5.70975735725273467, 0.0},
    {1.75000000000000000, 2.75000000000000000, -16.5143466436392508, 6.84046635352597967, 0.0289236014097712391, 0.0391819463547604761},
    {1.75000000000000000, 2.75000000000000000, -10.5194574709393045, 14.4518732182751745, -0.112552688888134138, 0.107918900703296020},
    {1.75000000000000000, 2.75000000000000000, -17.8750000000000000, 2.29116111624838659e-60, 0.0495199166254676308, 1.28209113960693274e-62},
    {1.75000000000000000, 2.75000000000000000, 200.000000000000000, 0.0, 2649523.94341843482, 0.0},
    {1.75000000000000000, 2.75000000000000000, -184.775906502257351, 76.5366864730179543, 0.00628320600485224625, -0.000408346362485359395},
    {1.75000000000000000, 2.75000000000000000, -117.700223451069142, 161.699280763918037, 0.271781795503393944, -1.64389782733590165},
    {1.75000000000000000, 2.75000000000000000, -200.000000000000000, 2.56353691328490808e-59, 0.00498851823197138809, 5.52893083687053033e-64},
};

struct WrightSample { double rho, delta, z_re, z_im, v_re, v_im; };
inline const WrightSample kWrightSamples[] = {
    {-0.625000000000000000, -0.625000000000000000, -0.250000000000000000, 0.0, -0.317753530987797997, 0.0},
    {-0.625000000000000000, -0.625000000000000000, -1.00000000000000000, 0.0, -0.243296444908575542, 0.0},
    {-0.625000000000000000, -0.625000000000000000, -2.50000000000000000, 0.0, 0.262076486911976875, 0.0},
    {-0.625000000000000000, -0.625000000000000000, -4.00000000000000000, 0.0, 0.00947803650680311161, 0.0},
    {-0.625000000000000000, -0.625000000000000000, 1.20000000000000000, 0.0, 0.00112732709804956417, 0.0},
    {-0.625000000000000000, -0.625000000000000000, 0.500000000000000000, 0.500000000000000000, -0.104754956871961331, 0.136146347193491436},
    {-0.625000000000000000, -1.25000000000000000, -0.250000000000000000, 0.0, 0.165993222818877806, 0.0},
    {-0.625000000000000000, -1.25000000000000000, -1.00000000000000000, 0.0, -0.398838648664724094, 0.0},
    {-0.625000000000000000, -1.25000000000000000, -2.50000000000000000, 0.0, 0.147613594810858159, 0.0},
    {-0.625000000000000000, -1.25000000000000000, -4.00000000000000000, 0.0, 0.0360693926441855828, 0.0},
    {-0.625000000000000000, -1.25000000000000000, 1.20000000000000000, 0.0, 0.109496038013041609, 0.0},
    {-0.625000000000000000, -1.25000000000000000, 0.500000000000000000, 0.500000000000000000, 0.303306391673871434, -0.108063630656664985},
    {-0.800000000000000000, 0.200000000000000000, -0.250000000000000000, 0.0, 0.298346455194711683, 0.0},
    {-0.800000000000000000, 0.200000000000000000, -1.00000000000000000, 0.0, 0.682033699356930926, 0.0},
    {-0.800000000000000000, 0.200000000000000000, -2.50000000000000000, 0.0, 0.000850177420495315422, 0.0},
    {-0.800000000000000000, 0.200000000000000000, -4.00000000000000000, 0.0, 1.89256754594643559e-36, 0.0},
    {-0.800000000000000000, 0.200000000000000000, 1.20000000000000000, 0.0, 0.0596866619619655626, 0.0},
    {-0.800000000000000000, 0.200000000000000000, 0.500000000000000000, 0.500000000000000000, 0.0986074132692109155, -0.0612526186741759481},
    {-0.750000000000000000, -0.750000000000000000, -0.250000000000000000, 0.0, -0.329821051687408805, 0.0},
    {-0.750000000000000000, -0.750000000000000000, -1.00000000000000000, 0.0, -0.596691176287046720, 0.0},
    {-0.750000000000000000, -0.750000000000000000, -2.50000000000000000, 0.0, 0.266482053931548409, 0.0},
    {-0.750000000000000000, -0.750000000000000000, -4.00000000000000000, 0.0, 3.58134710168047991e-10, 0.0},
    {-0.750000000000000000, -0.750000000000000000, 1.20000000000000000, 0.0, 0.00506420855887017740, 0.0},
    {-0.750000000000000000, -0.750000000000000000, 0.500000000000000000, 0.500000000000000000, -0.0175151358957080056, 0.0785108164337296384},
    {-0.750000000000000000, -1.50000000000000000, -0.250000000000000000, 0.0, 0.553826182691036220, 0.0},
    {-0.750000000000000000, -1.50000000000000000, -1.00000000000000000, 0.0, -0.396996111723830696, 0.0},
    {-0.750000000000000000, -1.50000000000000000, -2.50000000000000000, 0.0, 1.16934826813817923, 0.0},
    {-0.750000000000000000, -1.50000000000000000, -4.00000000000000000, 0.0, 9.21568948202477448e-9, 0.0},
    {-0.750000000000000000, -1.50000000000000000, 1.20000000000000000, 0.0, 0.0374370365269410253, 0.0},
    {-0.750000000000000000, -1.50000000000000000, 0.500000000000000000, 0.500000000000000000, 0.107886003608359354, -0.167329197138065246},
    {-0.666666666666666667, 0.333333333333333333, -0.250000000000000000, 0.0, 0.433619610498213434, 0.0},
    {-0.666666666666666667, 0.333333333333333333, -1.00000000000000000, 0.0, 0.525852113880167369, 0.0},
    {-0.666666666666666667, 0.333333333333333333, -2.50000000000000000, 0.0, 0.0890276458932811402, 0.0},
    {-0.666666666666666667, 0.333333333333333333, -4.00000000000000000, 0.0, 0.0000862805411292528348, 0.0},
    {-0.666666666666666667, 0.333333333333333333, 1.20000000000000000, 0.0, 0.141076440061070795, 0.0},
    {-0.666666666666666667, 0.333333333333333333, 0.500000000000000000, 0.500000000000000000, 0.240768641955295261, -0.106360610198739251},
    {-0.875000000000000000, -0.875000000000000000, -0.250000000000000000, 0.0, -0.253857458474203932, 0.0},
    {-0.875000000000000000, -0.875000000000000000, -1.00000000000000000, 0.0, -2.16268995466986938, 0.0},
    {-0.875000000000000000, -0.875000000000000000, -2.50000000000000000, 0.0, 1.82049167151568608e-29, 0.0},
    {-0.875000000000000000, -0.875000000000000000, -4.00000000000000000, 0.0, 0.0 /* 8.45e-1392 underflows to 0 */, 0.0},
    {-0.875000000000000000, -0.875000000000000000, 1.20000000000000000, 0.0, 0.00251247327527686677, 0.0},
    {-0.875000000000000000, -0.875000000000000000, 0.500000000000000000, 0.500000000000000000, 0.00112900910676694220, 0.0285195050196208504},
    {-0.875000000000000000, -1.75000000000000000, -0.250000000000000000, 0.0, 0.799316247304442439, 0.0},
    {-0.875000000000000000, -1.75000000000000000, -1.00000000000000000, 0.0, 3.02784671216078099, 0.0},
    {-0.875000000000000000, -1.75000000000000000, -2.50000000000000000, 0.0, 4.28363101574054066e-27, 0.0},
    {-0.875000000000000000, -1.75000000000000000, -4.00000000000000000, 0.0, 0.0 /* 5.44e-1388 underflows to 0 */, 0.0},
    {-0.875000000000000000, -1.75000000000000000, 1.20000000000000000, 0.0, 0.0116304108587966506, 0.0},
    {-0.875000000000000000, -1.75000000000000000, 0.500000000000000000, 0.500000000000000000, 0.0133378881145169897, -0.0768220754211896677},
    {-0.571428571428571429, 0.428571428571428571, -0.250000000000000000, 0.0, 0.508180799213341692, 0.0},
    {-0.571428571428571429, 0.428571428571428571, -1.00000000000000000, 0.0, 0.468720703400286719, 0.0},
    {-0.571428571428571429, 0.428571428571428571, -2.50000000000000000, 0.0, 0.116177179370023104, 0.0},
    {-0.571428571428571429, 0.428571428571428571, -4.00000000000000000, 0.0, 0.00402032114568256001, 0.0},
    {-0.571428571428571429, 0.428571428571428571, 1.20000000000000000, 0.0, 0.251687701200357734, 0.0},
    {-0.571428571428571429, 0.428571428571428571, 0.500000000000000000, 0.500000000000000000, 0.405584253817605867, -0.108363065034714309},
    {-0.500000000000000000, 0.500000000000000000, -2.00000000000000000, 0.0, 0.207553748710297352, 0.0},
    {-0.500000000000000000, 0.500000000000000000, 1.50000000000000000, 0.0, 0.321465534597603665, 0.0},
};

struct WrightLogSample { double nu, x, log_value; };
inline const WrightLogSample kWrightLogSamples[] = {
    {0.800000000000000000, 2.00000000000000000, -2.01827268820824412},
    {0.800000000000000000, 3.00000000000000000, -18.7057371272726752},
    {0.800000000000000000, 3.95999999999999996, -78.1589290964072336},
    {0.666666666666666667, 3.00000000000000000, -4.01679045480574814},
    {0.666666666666666667, 5.50000000000000000, -24.3670338124914890},
    {0.666666666666666667, 8.14000000000000057, -79.4277938362597865},
    {0.571428571428571429, 4.00000000000000000, -5.51639349255629122},
    {0.571428571428571429, 8.00000000000000000, -26.2539452705410065},
    {0.571428571428571429, 12.9000000000000004, -79.4759160225631976},
};

struct BesselKSample { double nu, z_re, z_im, v_re, v_im; };
inline const BesselKSample kBesselKSamples[] = {
    {0.500000000000000000, 1.00000000000000000, 0.0, 0.461068504447894558, 0.0},
    {0.500000000000000000, 2.50000000000000000, 0.0, 0.0650659431540099889, 0.0},
    {0.500000000000000000, 0.600000000000000000, 0.800000000000000000, 0.207960939937574236, -0.655642440041713125},
    {0.500000000000000000, 2.00000000000000000, 3.00000000000000000, -0.0839178032433451791, 0.0306137710200670539},
    {0.500000000000000000, 8.00000000000000000, 2.00000000000000000, -0.0000767389254864942166, -0.000124690132007756136},
    {0.500000000000000000, 0.300000000000000000, 1.10000000000000000, -0.156934373424861263, -0.855253267249184567},
    {1.00000000000000000, 1.00000000000000000, 0.0, 0.601907230197234575, 0.0},
    {1.00000000000000000, 2.50000000000000000, 0.0, 0.0738908163477470636, 0.0},
    {1.00000000000000000, 0.600000000000000000, 0.800000000000000000, 0.106448595752593718, -0.848011297455893122},
    {1.00000000000000000, 2.00000000000000000, 3.00000000000000000, -0.0864999764812817292, 0.0390614340052144719},
    {1.00000000000000000, 8.00000000000000000, 2.00000000000000000, -0.0000813038765376162163, -0.000129224611823323403},
    {1.00000000000000000, 0.300000000000000000, 1.10000000000000000, -0.402582619737990097, -0.919725200879345024},
    {1.50000000000000000, 1.00000000000000000, 0.0, 0.922137008895789117, 0.0},
    {1.50000000000000000, 2.50000000000000000, 0.0, 0.0910923204156139845, 0.0},
    {1.50000000000000000, 0.600000000000000000, 0.800000000000000000, -0.191776448133251722, -1.21539665601680039},
    {1.50000000000000000, 2.00000000000000000, 3.00000000000000000, -0.0897635181223058865, 0.0546892288485416420},
    {1.50000000000000000, 8.00000000000000000, 2.00000000000000000, -0.0000894343911910157755, -0.000137102532082595264},
    {1.50000000000000000, 0.300000000000000000, 1.10000000000000000, -0.916825839579908495, -0.919828782177959937},
    {2.70000000000000000, 1.00000000000000000, 0.0, 4.37424182619116283, 0.0},
    {2.70000000000000000, 2.50000000000000000, 0.0, 0.205504582776065436, 0.0},
    {2.70000000000000000, 0.600000000000000000, 0.800000000000000000, -4.54963241798474510, -2.45628178736011963},
    {2.70000000000000000, 2.00000000000000000, 3.00000000000000000, -0.0825175474523996360, 0.137705784863682985},
    {2.70000000000000000, 8.00000000000000000, 2.00000000000000000, -0.000129849994528561558, -0.000173257704814713698},
    {2.70000000000000000, 0.300000000000000000, 1.10000000000000000, -3.63420102784995861, 1.98583152219414659},
};

struct ForcedOdeSample { double alpha, lam, omega, t, v_re, v_im; };
inline const ForcedOdeSample kForcedOdeSamples[] = {
    {1.25000000000000000, 0.0, 1.00000000000000000, 0.500000000000000000, 0.347807609328845310, 0.0458861789673212619},
    {1.25000000000000000, 0.0, 1.00000000000000000, 2.00000000000000000, 1.11023401252319127, 0.956675019001356570},
    {1.25000000000000000, 0.0, 2.00000000000000000, 1.00000000000000000, 0.466795900611749579, 0.402232297020509993},
    {1.25000000000000000, 0.700000000000000000, 1.00000000000000000, 0.500000000000000000, 0.313953019032375216, 0.0432302753473420127},
    {1.25000000000000000, 0.700000000000000000, 1.00000000000000000, 2.00000000000000000, 0.489186549997430084, 0.654454827127650260},
    {1.25000000000000000, 0.700000000000000000, 2.00000000000000000, 1.00000000000000000, 0.332814249398652204, 0.341120714109674301},
    {1.25000000000000000, 2.00000000000000000, 1.00000000000000000, 0.500000000000000000, 0.260816594290802665, 0.0388355249044071603},
    {1.25000000000000000, 2.00000000000000000, 1.00000000000000000, 2.00000000000000000, 0.0795429641260643772, 0.362409373499747003},
    {1.25000000000000000, 2.00000000000000000, 2.00000000000000000, 1.00000000000000000, 0.173096934131827609, 0.256245091700412837},
    {1.50000000000000000, 0.0, 1.00000000000000000, 0.500000000000000000, 0.251245084374199231, 0.0139024104392178653},
    {1.50000000000000000, 0.0, 1.00000000000000000, 2.00000000000000000, 1.23583092263568383, 0.572487955123406653},
    {1.50000000000000000, 0.0, 2.00000000000000000, 1.00000000000000000, 0.436932212897859814, 0.202405057607690374},
    {1.50000000000000000, 0.700000000000000000, 1.00000000000000000, 0.500000000000000000, 0.237478423348046314, 0.0135067237896696568},
    {1.50000000000000000, 0.700000000000000000, 1.00000000000000000, 2.00000000000000000, 0.667733995708812393, 0.436896216817357974},
    {1.50000000000000000, 0.700000000000000000, 2.00000000000000000, 1.00000000000000000, 0.353937025762702714, 0.183707493034666575},
    {1.50000000000000000, 2.00000000000000000, 1.00000000000000000, 0.500000000000000000, 0.213922532122105585, 0.0128089008831165786},
    {1.50000000000000000, 2.00000000000000000, 1.00000000000000000, 2.00000000000000000, 0.161999847846704817, 0.274193656876078900},
    {1.50000000000000000, 2.00000000000000000, 2.00000000000000000, 1.00000000000000000, 0.234527155290169440, 0.154052613306963423},
    {1.75000000000000000, 0.0, 1.00000000000000000, 0.500000000000000000, 0.177927301931916238, 0.00280887897998781970},
    {1.75000000000000000, 0.0, 1.00000000000000000, 2.00000000000000000, 1.32858041174355985, 0.248154837781121138},
    {1.75000000000000000, 0.0, 2.00000000000000000, 1.00000000000000000, 0.394989319624671522, 0.0737768746779138289},
    {1.75000000000000000, 0.700000000000000000, 1.00000000000000000, 0.500000000000000000, 0.172767668224327308, 0.00277184544287850886},
    {1.75000000000000000, 0.700000000000000000, 1.00000000000000000, 2.00000000000000000, 0.851272906861363578, 0.208181162140630224},
    {1.75000000000000000, 0.700000000000000000, 2.00000000000000000, 1.00000000000000000, 0.347818928151767408, 0.0700081549515604944},
    {1.75000000000000000, 2.00000000000000000, 1.00000000000000000, 0.500000000000000000, 0.163540738355911600, 0.00270456126262892936},
    {1.75000000000000000, 2.00000000000000000, 1.00000000000000000, 2.00000000000000000, 0.304109918491584263, 0.151268109949310565},
    {1.75000000000000000, 2.00000000000000000, 2.00000000000000000, 1.00000000000000000, 0.271550679665249987, 0.0635425103844704200},
};

struct FAlphaHalfSample { double alpha, z, mu, delta, value; };
inline const FAlphaHalfSample kFAlphaHalfSamples[] = {
    {1.50000000000000000, 0.500000000000000000, 2.00000000000000000, -0.750000000000000000, 0.667537261858105046},
    {1.50000000000000000, 1.00000000000000000, 2.00000000000000000, -0.750000000000000000, 0.909897815385413968},
    {1.50000000000000000, 2.00000000000000000, 2.00000000000000000, -0.750000000000000000, 0.337710105223451249},
    {1.50000000000000000, 4.00000000000000000, 2.00000000000000000, -0.750000000000000000, 6.75694211278852752e-12},
    {1.25000000000000000, 1.00000000000000000, 2.00000000000000000, -0.625000000000000000, 0.622005523196267174},
    {1.25000000000000000, 3.00000000000000000, 2.00000000000000000, -0.625000000000000000, 0.0408871528147384321},
    {1.75000000000000000, 0.800000000000000044, 2.00000000000000000, -0.875000000000000000, 1.04365649575268059},
    {1.75000000000000000, 1.60000000000000009, 2.00000000000000000, -0.875000000000000000, 0.668716168490841450},
};

struct Gr3873Sample { double nu, mu, value; };
inline const Gr3873Sample kGr3873Samples[] = {
    {1.50000000000000000, 1.00000000000000000, 0.601907230197234575},
    {1.00000000000000000, 2.00000000000000000, 0.0676676416183063459},
    {2.25000000000000000, 1.70000000000000000, 0.284381570783455818},
};

}  // namespace refvals
