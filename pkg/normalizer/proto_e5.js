const fs = require('fs');
const tf = require('@tensorflow/tfjs');
require('@tensorflow/tfjs-backend-wasm');
const PAD = '_', SOS = '>', EOS = '<';
function fnv(str, seed) {
  let h = 0x811c9dc5 ^ seed;
  for (let i = 0; i < str.length; i++) { h ^= str.charCodeAt(i); h = Math.imul(h, 0x01000193); }
  return (h >>> 0) % 100;
}
const cfg = {
  hidden: parseInt(process.env.HIDDEN || '64'),
  repeats: parseInt(process.env.REPEATS || '8'),
  synth: parseInt(process.env.SYNTH || '6000'),
  epochs: parseInt(process.env.EPOCHS || '30'),
  lr: parseFloat(process.env.LR || '0.01'),
  minLen: 3, maxSynthLen: 9,
};
(async () => {
  await tf.setBackend('wasm');
  await tf.ready();
  console.log(JSON.stringify(cfg));
  const rows = fs.readFileSync('/tmp/identity.tsv', 'utf8').trim().split('\n').map(l => {
    const [acc, canon, word] = l.split('\t');
    const accented = acc.endsWith('z') ? acc.slice(0, -1) + 's' : acc;
    return {accented, canonical: canon, word};
  });
  const splits = {train: [], val: [], test: []};
  for (const r of rows) splits[(b => b < 80 ? 'train' : b < 90 ? 'val' : 'test')(fnv(r.word, 7))].push(r);
  const chars = new Set([PAD, SOS, EOS]);
  for (const r of rows) for (const ch of (r.accented + r.canonical)) chars.add(ch);
  const vocab = [...chars].sort();
  const index = Object.fromEntries(vocab.map((c, i) => [c, i]));
  const letters = vocab.filter(ch => ![PAD, SOS, EOS].includes(ch));
  const maxLen = Math.max(...rows.map(r => Math.max(r.accented.length, r.canonical.length))) + 2;
  let s = 555;
  const rand = () => (s = Math.imul(s, 48271) % 2147483647, (s & 0x7fffffff) / 2147483647);
  const synthetic = [];
  while (synthetic.length < cfg.synth) {
    const len = cfg.minLen + Math.floor(rand() * (cfg.maxSynthLen - cfg.minLen + 1));
    let w = '';
    for (let i = 0; i < len; i++) w += letters[Math.floor(rand() * letters.length)];
    if (w.endsWith('s') || w.endsWith('z')) continue;
    synthetic.push({accented: w, canonical: w});
  }
  const trainRows = [];
  for (let r = 0; r < cfg.repeats; r++) trainRows.push(...splits.train);
  trainRows.push(...synthetic);
  function tensorize(list) {
    const n = list.length;
    const enc = tf.buffer([n, maxLen, vocab.length]);
    const dec = tf.buffer([n, maxLen, vocab.length]);
    const y = tf.buffer([n, maxLen, vocab.length]);
    list.forEach((r, row) => {
      const src = [...r.accented].map(c => index[c]);
      const dst = [SOS, ...r.canonical, EOS].map(c => index[c]);
      src.forEach((ci, t) => enc.set(1, row, t, ci));
      for (let t = src.length; t < maxLen; t++) enc.set(1, row, t, index[PAD]);
      dst.forEach((ci, t) => { if (t < maxLen) dec.set(1, row, t, ci); if (t > 0 && t - 1 < maxLen) y.set(1, row, t - 1, ci); });
      for (let t = dst.length; t < maxLen; t++) dec.set(1, row, t, index[PAD]);
      for (let t = Math.max(dst.length - 1, 0); t < maxLen; t++) y.set(1, row, t, index[PAD]);
    });
    return [enc.toTensor(), dec.toTensor(), y.toTensor()];
  }
  const encIn = tf.input({shape: [maxLen, vocab.length]});
  const encLstm = tf.layers.lstm({units: cfg.hidden, returnState: true, name: 'enc'});
  const [, h, c] = encLstm.apply(encIn);
  const decIn = tf.input({shape: [maxLen, vocab.length]});
  const decLstm = tf.layers.lstm({units: cfg.hidden, returnSequences: true, returnState: true, name: 'dec'});
  const [decSeq] = decLstm.apply(decIn, {initialState: [h, c]});
  const dense = tf.layers.dense({units: vocab.length, activation: 'softmax', name: 'out'});
  const model = tf.model({inputs: [encIn, decIn], outputs: dense.apply(decSeq)});
  const [trEnc, trDec, trY] = tensorize(trainRows);
  const [vaEnc, vaDec, vaY] = tensorize(splits.val);
  console.log('train samples:', trEnc.shape[0]);
  const t0 = Date.now();
  let lr = cfg.lr;
  for (let epoch = 1; epoch <= cfg.epochs; epoch++) {
    if (epoch === 20 || epoch === 27) lr *= 0.4;
    model.compile({optimizer: tf.train.rmsprop(lr), loss: 'categoricalCrossentropy', metrics: ['accuracy']});
    const hist = await model.fit([trEnc, trDec], trY, {epochs: 1, batchSize: 64, shuffle: true, verbose: 0, validationData: [[vaEnc, vaDec], vaY]});
    if (epoch % 5 === 0 || epoch === 1) console.log(`epoch ${epoch}: acc=${hist.history.acc[0].toFixed(3)} val_acc=${hist.history.val_acc[0].toFixed(3)} (${((Date.now()-t0)/1000|0)}s)`);
  }
  const encModel = tf.model({inputs: encIn, outputs: [h, c]});
  const stepIn = tf.input({shape: [1, vocab.length]});
  const sh0 = tf.input({shape: [cfg.hidden]});
  const sc0 = tf.input({shape: [cfg.hidden]});
  const [stepSeq, nh, nc] = decLstm.apply(stepIn, {initialState: [sh0, sc0]});
  const stepModel = tf.model({inputs: [stepIn, sh0, sc0], outputs: [dense.apply(stepSeq), nh, nc]});
  function decode(accented) {
    return tf.tidy(() => {
      const buf = tf.buffer([1, maxLen, vocab.length]);
      [...accented].forEach((ch, t) => buf.set(1, 0, t, index[ch]));
      for (let t = accented.length; t < maxLen; t++) buf.set(1, 0, t, index[PAD]);
      let [sh, sc] = encModel.predict(buf.toTensor());
      let cur = index[SOS], out = '';
      for (let t = 0; t < maxLen; t++) {
        const b = tf.buffer([1, 1, vocab.length]); b.set(1, 0, 0, cur);
        const [probs, h2, c2] = stepModel.predict([b.toTensor(), sh, sc]);
        cur = probs.squeeze().argMax().dataSync()[0];
        sh = h2; sc = c2;
        const ch = vocab[cur];
        if (ch === EOS || ch === PAD) break;
        out += ch;
      }
      return out;
    });
  }
  for (const name of ['val', 'test']) {
    let exact = 0, identity = 0;
    const wrong = [];
    for (const r of splits[name]) {
      const got = decode(r.accented);
      if (got === r.canonical) exact++; else wrong.push(`${r.accented}->${got}(want ${r.canonical})`);
      if (r.accented === r.canonical) identity++;
    }
    const n = splits[name].length;
    console.log(`${name} exact=${(exact/n).toFixed(3)} identity=${(identity/n).toFixed(3)} n=${n} wrong=[${wrong.slice(0,8).join(' ')}]`);
  }
  console.log(`total ${((Date.now()-t0)/1000|0)}s`);
  process.exit(0);
})();
